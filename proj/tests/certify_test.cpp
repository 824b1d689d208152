#include "coxdef/certify.hpp"
#include "coxdef/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace coxdef {
namespace {

TEST(VerifyRelations, GeneralChartMixedOrders) {
  GeneralChartParams p;
  p.orders = QuadPrismOrders(3, 4, 5, 3);
  p.t13 = 6.0;
  p.t24 = 4.5;
  p.v23 = -0.3;
  p.v24 = -2.0;
  p.v34 = -1.7;
  const auto rep = verify_relations(build_general(p), p.orders.edge_orders());
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.generators.size(), 4u);
  EXPECT_EQ(rep.pairs.size(), 6u);
  EXPECT_LE(rep.worst_finite_residual(), 1e-10);
  for (const auto& pc : rep.pairs)
    if (pc.order.is_infinite())
      EXPECT_NEAR(pc.plane_trace, pc.value - 2.0, 0.0);
}

TEST(VerifyRelations, DeclaredOrderMismatch) {
  GeneralChartParams p;  // mu12 = mu(3)
  auto declared = p.orders.edge_orders();
  declared.set(0, 1, Order::finite(4));
  const auto rep = verify_relations(build_general(p), declared);
  EXPECT_FALSE(rep.all_pass());
  for (const auto& pc : rep.pairs)
    if (pc.pair == IndexPair{0, 1})
      EXPECT_GT(pc.value, 1e-3);
}

TEST(VerifyRelations, InfiniteEdgeBelowFourFails) {
  GeneralChartParams p;
  auto sys = build_general(p);
  sys = sys.with_v(2, sys.v(2).with(0, -3.5));
  EXPECT_FALSE(verify_relations(sys, p.orders.edge_orders()).all_pass());
}

TEST(VerifyRelations, AllChartsFuzz) {
  ChartSampler s(2024);
  for (int k = 0; k < 300; ++k) {
    const auto o = s.quad_orders();
    ASSERT_TRUE(verify_relations(build_general(s.general(o)), o.edge_orders()).all_pass());
    ASSERT_TRUE(verify_relations(build_concurrent(s.concurrent(o)), o.edge_orders()).all_pass());
    try {
      const auto pt = build_standard(o, s.standard());
      ASSERT_TRUE(verify_relations(realize_representation(pt, 1.0), o.edge_orders()).all_pass());
    } catch (const ConditionFailure&) {
    }
  }
}

TEST(DetDefect, PositiveOnStandardChart) {
  ChartSampler s(55);
  int checked = 0;
  while (checked < 2000) {
    const auto o = s.quad_orders();
    StandardChartPoint pt;
    try {
      pt = build_standard(o, s.standard());
    } catch (const ConditionFailure&) {
      continue;
    }
    ++checked;
    ASSERT_GT(det_defect(pt.cartan()), 0.0);
  }
}

// det M = a4 v44 det M3x3 for the a4 = 1 representative: expand along the
// fourth column, which is e4 in [v] up to v44.
TEST(DetDefect, DeterminantFactorsThroughA4V44) {
  ChartSampler s(56);
  for (int k = 0; k < 200; ++k) {
    const auto o = s.quad_orders();
    StandardChartPoint pt;
    try {
      pt = build_standard(o, s.standard());
    } catch (const ConditionFailure&) {
      continue;
    }
    const auto m = pt.cartan();
    const double expect = pt.a4v44 * leading_det3(m);
    EXPECT_NEAR(det(m.matrix()), expect, 1e-8 * (1.0 + std::abs(expect)));
  }
}

TEST(DetLocus, BoundarySlicesStayAwayFromZero) {
  const auto rep = det_locus_check(QuadPrismOrders{}, 2000, 7);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.t13_slice.samples, 2000u);
  EXPECT_GT(rep.t13_slice.min_e, 0.0);
  EXPECT_GT(rep.t24_slice.min_e, 0.0);
  EXPECT_EQ(rep.t13_slice.argmin.t13, 4.0);
  EXPECT_EQ(rep.t24_slice.argmin.t24, 4.0);
}

TEST(DetLocus, RootOnT13RayIsRankThree) {
  // the standard image of the concurrent all -1 point sits on det M = 0 at T13 = 16
  const QuadPrismOrders o;
  auto base = standard_coordinates(cartan_of(build_concurrent(ConcurrentChartParams{})));
  base.t13 = 4.0;
  const auto root = det_root_on_t13_ray(o, base);
  ASSERT_TRUE(root.has_value());
  auto at = base;
  at.t13 = *root;
  const auto pt = build_standard(o, at);
  EXPECT_LE(std::abs(pt.a4v44), 1e-8);
  EXPECT_EQ(rank(pt.cartan().matrix(), 1e-7), 3u);
  EXPECT_EQ(rank(realize_representation(pt, 1.0, 0.0, 1e-8).v_matrix(), 1e-7), 3u);
}

TEST(Cocompact, Examples) {
  GeneralChartParams p;
  p.t13 = p.t24 = 5.0;
  EXPECT_TRUE(is_convex_cocompact(cartan_of(build_general(p)), p.orders));
  p.t13 = 4.0;
  EXPECT_FALSE(is_convex_cocompact(cartan_of(build_general(p)), p.orders));
  p.t13 = p.t24 = 4.5;
  EXPECT_TRUE(is_convex_cocompact(cartan_of(build_general(p)), p.orders.edge_orders()));
}

TEST(Cocompact, ConcurrentAlways) {
  ChartSampler s(4);
  for (int k = 0; k < 2000; ++k) {
    const auto c = s.concurrent(s.quad_orders());
    const auto m = cartan_of(build_concurrent(c));
    ASSERT_GT(m.product(0, 2), 4.0);
    ASSERT_GT(m.product(1, 3), 4.0);
    ASSERT_TRUE(is_convex_cocompact(m, c.orders));
  }
}

TEST(Cocompact, InvariantUnderDiagonalConjugation) {
  ChartSampler s(6);
  for (int k = 0; k < 200; ++k) {
    auto g = s.general(s.quad_orders());
    if (k % 3 == 0)
      g.t13 = 4.0;
    const auto m = cartan_of(build_general(g));
    std::array<double, 4> d;
    for (auto& x : d)
      x = s.uniform(0.1, 10.0);
    // conjugation moves T13 = 4 by an ulp, so the boundary needs a tolerance to stay put
    EXPECT_EQ(is_convex_cocompact(m, g.orders, 1e-9),
              is_convex_cocompact(m.conjugated(d), g.orders, 1e-9));
  }
}

TEST(Cocompact, WrongDiagram) {
  const auto m = cartan_of(build_general(GeneralChartParams{}));
  auto orders = QuadPrismOrders{}.edge_orders();
  orders.set(0, 2, Order::finite(5));
  EXPECT_THROW(is_convex_cocompact(m, orders), WrongDiagram);
  const CartanMatrix small(Mat{{2, -1}, {-1, 2}});
  EXPECT_THROW(is_convex_cocompact(small, QuadPrismOrders{}), WrongDiagram);
}

TEST(Cocompact, ToleranceControlsStrictness) {
  GeneralChartParams p;
  p.t13 = p.t24 = 4.0 + 1e-12;
  const auto m = cartan_of(build_general(p));
  EXPECT_TRUE(is_convex_cocompact(m, p.orders));
  EXPECT_FALSE(is_convex_cocompact(m, p.orders, 1e-9));
}

}  // namespace
}  // namespace coxdef
