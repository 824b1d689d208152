#include "coxdef/defspace.hpp"
#include "coxdef/sampling.hpp"
#include "coxdef/vinberg.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace coxdef {
namespace {

GeneralChartParams example_general() {
  GeneralChartParams p;
  p.orders = QuadPrismOrders(3, 4, 5, 6);
  p.t13 = 9.0;
  p.t24 = 5.0;
  p.v23 = -2.0;
  p.v24 = -0.5;
  p.v34 = -3.0;
  return p;
}

ReflectionSystem coordinate_reflections() {
  std::vector<Covec> a;
  std::vector<Vec> v;
  for (std::size_t i = 0; i < 4; ++i) {
    a.push_back(Covec::basis(4, i));
    v.push_back(Vec::basis(4, i).with(i, 2.0));
  }
  return ReflectionSystem(a, v);
}

TEST(ReflectionSystem, RejectsBadNormalization) {
  EXPECT_THROW(ReflectionSystem({Covec::basis(4, 0), Covec::basis(4, 1)},
                                {Vec::basis(4, 0), Vec{0, 2, 0, 0}}),
               NormalizationError);
  EXPECT_THROW(ReflectionSystem({Covec::basis(4, 0)}, {Vec{2, 0, 0, 0}, Vec::basis(4, 1)}),
               DimensionMismatch);
}

TEST(CartanOf, OrthogonalCoordinateReflections) {
  EXPECT_EQ(cartan_of(coordinate_reflections()).matrix(), 2.0 * Mat::identity(4));
}

TEST(CartanOf, EntriesArePairings) {
  const auto sys = build_general(example_general());
  const auto m = cartan_of(sys);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(m(i, j), pair(sys.alpha(i), sys.v(j)));
}

TEST(CartanOf, GeneralChartDisplay) {
  const auto p = example_general();
  const auto& o = p.orders;
  const Mat expected = {
      {2, -o.mu12(), -p.t13, -o.mu14()},
      {-1, 2, p.v23, p.v24},
      {-1, o.mu23() / p.v23, 2, p.v34},
      {-1, p.t24 / p.v24, o.mu34() / p.v34, 2},
  };
  const auto m = cartan_of(build_general(p));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_NEAR(m(i, j), expected(i, j), 1e-15);
}

TEST(CartanOf, SimplexVIsCartan) {
  SimplexChartParams p;
  p.orders = EdgeOrders(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      p.orders.set(i, j, Order::finite(3 + static_cast<int>(i + j) % 3));
  p.free_entries = {{{1, 2}, -0.7}, {{1, 3}, -2.0}, {{2, 3}, -1.3}};
  const auto sys = build_simplex(p);
  EXPECT_EQ(cartan_of(sys).matrix(), sys.v_matrix());
}

TEST(CartanMatrix, Invariants) {
  EXPECT_THROW(CartanMatrix(Mat::identity(3)), InvariantViolation);
  EXPECT_THROW(CartanMatrix(Mat{{2, 0.5}, {-1, 2}}), InvariantViolation);
  EXPECT_THROW(CartanMatrix(Mat{{2, 0}, {-1, 2}}), InvariantViolation);
  EXPECT_NO_THROW(CartanMatrix(Mat{{2, -1}, {-1, 2}}));
}

TEST(CheckVinberg, GeneralPointsPass) {
  const auto p = example_general();
  const auto rep = check_vinberg(build_general(p), p.orders.edge_orders());
  EXPECT_TRUE(rep.all_pass()) << rep.c5_certificate;
  EXPECT_LE(rep.c4.worst, 1e-12);

  ChartSampler s(101);
  for (int k = 0; k < 300; ++k) {
    const auto g = s.general(s.quad_orders());
    ASSERT_TRUE(check_vinberg(build_general(g), g.orders.edge_orders()).all_pass());
  }
}

TEST(CheckVinberg, PositiveV23BreaksC2) {
  const auto p = example_general();
  auto sys = build_general(p);
  // M23 = v23 sits in row 2 of v_3
  Vec v3 = sys.v(2).with(1, 1.0);
  const auto rep = check_vinberg(sys.with_v(2, v3), p.orders.edge_orders());
  EXPECT_FALSE(rep.c2.pass);
}

TEST(CheckVinberg, T13BelowFourBreaksC4) {
  const auto p = example_general();
  auto sys = build_general(p);
  const Vec v3 = sys.v(2).with(0, -3.9);
  const auto rep = check_vinberg(sys.with_v(2, v3), p.orders.edge_orders());
  EXPECT_FALSE(rep.c4.pass);
  ASSERT_FALSE(rep.c4.failures.empty());
  EXPECT_NE(rep.c4.failures.front().find("(1,3)"), std::string::npos);
}

TEST(CheckVinberg, ZeroSymmetryBreaksC3) {
  const auto sys = coordinate_reflections();
  const auto broken = sys.with_v(1, Vec{-1, 2, 0, 0});
  EdgeOrders orders(4);
  const auto rep = check_vinberg(broken, orders);
  EXPECT_FALSE(rep.c3.pass);
}

TEST(CheckVinberg, ConcurrentSignPattern) {
  ChartSampler s(5);
  for (int k = 0; k < 200; ++k) {
    const auto c = s.concurrent(s.quad_orders());
    const auto rep = check_vinberg(build_concurrent(c), c.orders.edge_orders());
    ASSERT_TRUE(rep.all_pass());
    EXPECT_EQ(rep.c5_certificate, "concurrent sign pattern");
  }
}

TEST(CheckVinberg, WrongSignPatternFailsC5) {
  // alpha_4 = alpha_1 + alpha_2 + alpha_3 with v_4 adjusted so alpha_4(v_4) = 2
  const auto c = ConcurrentChartParams{};
  const auto sys = build_concurrent(c);
  std::vector<Covec> a(sys.alphas().begin(), sys.alphas().end());
  a[3] = Covec{1, 1, 1, 0};
  std::vector<Vec> v(sys.vs().begin(), sys.vs().end());
  v[3] = Vec{1, 1, 0, 0};
  const auto rep = check_vinberg(ReflectionSystem(a, v), c.orders.edge_orders());
  EXPECT_FALSE(rep.c5.pass);
}

TEST(RelationSpaceTrivial, Examples) {
  const auto g = build_general(example_general());
  EXPECT_TRUE(relation_space_trivial(g.alphas(), cartan_of(g)));

  const auto c = build_concurrent(ConcurrentChartParams{});
  EXPECT_TRUE(relation_space_trivial(c.alphas(), cartan_of(c)));

  // the relation alpha_1 + alpha_2 - alpha_4 = 0 carries mixed signs; make it non-negative
  const std::vector<Covec> same_sign = {Covec{1, 0, 0, 0}, Covec{0, 1, 0, 0}, Covec{0, 0, 1, 0},
                                        Covec{-1, -1, 0, 0}};
  EXPECT_FALSE(relation_space_trivial(same_sign, cartan_of(g)));

  // alphas spanning two dimensions leave a two-dimensional relation space
  const std::vector<Covec> flat = {Covec{1, 0, 0, 0}, Covec{0, 1, 0, 0}, Covec{1, 1, 0, 0},
                                   Covec{1, -1, 0, 0}};
  EXPECT_THROW(relation_space_trivial(flat, cartan_of(g)), UnsupportedShape);
}

TEST(Cycles, CanonicalForm) {
  EXPECT_EQ(canonical_cycle({2, 0, 1}), (Cycle{0, 1, 2}));
  EXPECT_EQ(canonical_cycle({3, 1, 2}), (Cycle{1, 2, 3}));
  EXPECT_EQ(reversed_cycle({0, 1, 2}), (Cycle{0, 2, 1}));
  EXPECT_EQ(reversed_cycle({0, 2}), (Cycle{0, 2}));
  EXPECT_EQ(cycle_label({0, 2, 3}), "(1,3,4)");
}

TEST(CyclicInvariants, CountAndGeneralChartValues) {
  const auto p = example_general();
  const auto& o = p.orders;
  const auto inv = cyclic_invariants(cartan_of(build_general(p)));
  // 6 pairs, 4 triples in two orientations, 6 four-cycles
  EXPECT_EQ(inv.values().size(), 20u);
  EXPECT_NEAR(inv.at({0, 2}), p.t13, 1e-12);
  EXPECT_NEAR(inv.at({1, 3}), p.t24, 1e-12);
  EXPECT_NEAR(inv.at({0, 1, 2}), o.mu12() * p.v23, 1e-12);
  EXPECT_NEAR(inv.at({0, 1, 3}), o.mu12() * p.v24, 1e-12);
  EXPECT_NEAR(inv.at({0, 3, 2}), o.mu14() * o.mu34() / p.v34, 1e-12);
  // rotations name the same invariant
  EXPECT_EQ(inv.at({2, 0, 1}), inv.at({0, 1, 2}));
}

// With M14 = M21 = M31 = -1 the generators read off the coordinates; (1,2,4)
// picks up mu14 from M41.
TEST(CyclicInvariants, StandardChartGenerators) {
  const QuadPrismOrders o(3, 4, 5, 6);
  const StandardCoordinates c{7.0, 5.0, -2.0, -0.5, -3.0};
  const auto inv = cyclic_invariants(build_standard(o, c).cartan());
  EXPECT_NEAR(inv.at({0, 2}), c.t13, 1e-9);
  EXPECT_NEAR(inv.at({1, 3}), c.t24, 1e-9);
  EXPECT_NEAR(inv.at({0, 1, 2}), o.mu12() * c.v23, 1e-9);
  EXPECT_NEAR(inv.at({0, 1, 3}), o.mu12() * o.mu14() * c.v24, 1e-9);
  EXPECT_NEAR(inv.at({0, 3, 2}), o.mu34() / c.v34, 1e-9);
}

TEST(CyclicInvariants, ReversalProductRule) {
  ChartSampler s(77);
  for (int k = 0; k < 200; ++k) {
    const auto g = s.general(s.quad_orders());
    const auto m = cartan_of(build_general(g));
    const auto inv = cyclic_invariants(m);
    for (const auto& [c, value] : inv.values()) {
      double pairs = 1.0;
      for (std::size_t t = 0; t < c.size(); ++t)
        pairs *= m.product(c[t], c[(t + 1) % c.size()]);
      EXPECT_TRUE(relative_close(value * inv.at(reversed_cycle(c)), pairs, 1e-9)) << cycle_label(c);
    }
  }
}

TEST(CyclicInvariants, DiagonalConjugationInvariance) {
  ChartSampler s(9);
  for (int k = 0; k < 100; ++k) {
    const auto g = s.general(s.quad_orders());
    const auto m = cartan_of(build_general(g));
    std::array<double, 4> d;
    for (auto& x : d)
      x = std::exp(s.uniform(std::log(0.1), std::log(10.0)));
    const auto a = cyclic_invariants(m);
    const auto b = cyclic_invariants(m.conjugated(d));
    for (const auto& [c, value] : a.values())
      EXPECT_TRUE(relative_close(value, b.at(c), 1e-9)) << cycle_label(c);
  }
}

TEST(CyclicInvariants, StrictNegativityOfOffDiagonals) {
  ChartSampler s(19);
  for (int k = 0; k < 200; ++k) {
    const auto g = s.general(s.quad_orders());
    const auto m = cartan_of(build_general(g));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j)
          EXPECT_LT(m(i, j), 0.0);
  }
}

// Independent oracle: evaluate each of the eleven cycles directly from the
// Cartan entries and compare with the generator formula.
TEST(Identities, HoldOnStandardChart) {
  ChartSampler s(31);
  int checked = 0;
  while (checked < 300) {
    const auto o = s.quad_orders();
    StandardChartPoint pt;
    try {
      pt = build_standard(o, s.standard());
    } catch (const std::domain_error&) {
      continue;
    }
    const auto rep = derived_invariant_identities(cyclic_invariants(pt.cartan()), o);
    ASSERT_EQ(rep.residuals.size(), 11u);
    EXPECT_TRUE(rep.all_pass()) << rep.worst();
    ++checked;
  }
}

TEST(Identities, HoldAtBoundary) {
  const QuadPrismOrders o(3, 4, 3, 5);
  const auto pt = build_standard(o, StandardCoordinates{4.0, 4.0, -1.0, -2.0, -0.5});
  EXPECT_TRUE(derived_invariant_identities(cyclic_invariants(pt.cartan()), o).all_pass());
}

TEST(Identities, DetectPerturbedEntry) {
  const QuadPrismOrders o(3, 3, 3, 3);
  const auto pt = build_standard(o, StandardCoordinates{6.0, 6.0, -1.0, -1.0, -1.0});
  const Mat m = pt.cartan().matrix();
  // M12 M21 drifts off mu12; an infinite-edge entry would only move to another valid point
  const CartanMatrix perturbed(m.with(0, 1, m(0, 1) + 1e-3));
  EXPECT_FALSE(derived_invariant_identities(cyclic_invariants(perturbed), o).all_pass());
}

TEST(ProjectiveEquivalence, Examples) {
  const auto p = example_general();
  const auto m = cartan_of(build_general(p));
  EXPECT_TRUE(projectively_equivalent(m, m));
  const std::array<double, 4> d{0.5, 3.0, 7.0, 0.2};
  EXPECT_TRUE(projectively_equivalent(m, m.conjugated(d)));

  auto q = p;
  q.v23 -= 1e-3;
  EXPECT_FALSE(projectively_equivalent(m, cartan_of(build_general(q))));
}

TEST(ProjectiveEquivalence, NonQuadSizeUsesAllCycles) {
  SimplexChartParams p;
  p.orders = EdgeOrders(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      p.orders.set(i, j, Order::finite(3));
  p.free_entries = {{{1, 2}, -1.0}, {{1, 3}, -1.0}, {{2, 3}, -1.0}};
  const auto m = cartan_of(build_simplex(p));
  const std::array<double, 4> d{1.0, 2.0, 3.0, 4.0};
  EXPECT_TRUE(projectively_equivalent(m, m.conjugated(d)));
  p.free_entries[{2, 3}] = -2.0;
  EXPECT_FALSE(projectively_equivalent(m, cartan_of(build_simplex(p))));
}

}  // namespace
}  // namespace coxdef
