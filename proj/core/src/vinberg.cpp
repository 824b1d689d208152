#include "coxdef/vinberg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace coxdef {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

bool is_quad_prism(const EdgeOrders& orders) {
  try {
    QuadPrismOrders::from(orders);
    return true;
  } catch (const InvalidOrders&) {
    return false;
  }
}

}  // namespace

ReflectionSystem::ReflectionSystem(std::vector<Covec> alphas, std::vector<Vec> vs)
    : alphas_(std::move(alphas)), vs_(std::move(vs)) {
  if (alphas_.size() != vs_.size())
    throw DimensionMismatch("reflection system needs as many vectors as covectors");
  if (alphas_.size() < 2 || alphas_.size() > kMaxDim)
    throw DimensionMismatch("reflection system needs 2.." + std::to_string(kMaxDim) + " sides");
  const std::size_t d = alphas_.front().dim();
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (alphas_[i].dim() != d || vs_[i].dim() != d)
      throw DimensionMismatch("reflection system with mixed dimensions");
    const double av = pair(alphas_[i], vs_[i]);
    if (!is_normalized(alphas_[i], vs_[i]))
      throw NormalizationError("alpha_" + std::to_string(i + 1) + "(v_" + std::to_string(i + 1) +
                               ") = " + fmt(av) + ", expected 2");
  }
}

Mat ReflectionSystem::reflection(std::size_t i) const {
  return coxdef::reflection(alphas_[i], vs_[i]);
}

Mat ReflectionSystem::v_matrix() const {
  return Mat::from_columns(vs_);
}

Mat ReflectionSystem::pairing_matrix() const {
  Mat m(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      // the constructor already held alpha_i(v_i) to 2 relative to the size of its terms
      m = m.with(i, j, i == j ? 2.0 : pair(alphas_[i], vs_[j]));
  return m;
}

ReflectionSystem ReflectionSystem::with_v(std::size_t j, const Vec& v) const {
  auto vs = vs_;
  vs.at(j) = v;
  return ReflectionSystem(alphas_, std::move(vs));
}

CartanMatrix::CartanMatrix(const Mat& m, double tol) : m_(m) {
  const std::size_t f = m.dim();
  for (std::size_t i = 0; i < f; ++i) {
    if (std::abs(m(i, i) - 2.0) > tol)
      throw InvariantViolation("Cartan diagonal entry " + pair_label(i, i) + " = " + fmt(m(i, i)));
    for (std::size_t j = 0; j < f; ++j) {
      if (i == j)
        continue;
      if (m(i, j) > tol)
        throw InvariantViolation("Cartan entry " + pair_label(i, j) + " = " + fmt(m(i, j)) +
                                 " is positive");
      if (std::abs(m(i, j)) <= tol && std::abs(m(j, i)) > tol)
        throw InvariantViolation("Cartan zero pattern not symmetric at " + pair_label(i, j));
    }
  }
}

CartanMatrix CartanMatrix::conjugated(std::span<const double> diag) const {
  if (diag.size() != size())
    throw DimensionMismatch("conjugation by diagonal of wrong size");
  Mat c(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      c = c.with(i, j, diag[i] * m_(i, j) / diag[j]);
  return CartanMatrix(c);
}

CartanMatrix cartan_of(const ReflectionSystem& sys) {
  return CartanMatrix(sys.pairing_matrix());
}

void ConditionResult::fail(std::string why) {
  pass = false;
  failures.push_back(std::move(why));
}

VinbergReport check_vinberg(const ReflectionSystem& sys, const EdgeOrders& orders, double tol) {
  if (orders.size() != sys.size())
    throw DimensionMismatch("edge order table does not match the number of sides");
  const Mat m = sys.pairing_matrix();
  const std::size_t f = sys.size();
  VinbergReport rep;

  for (std::size_t i = 0; i < f; ++i) {
    const double r = std::abs(m(i, i) - 2.0);
    rep.c1.worst = std::max(rep.c1.worst, r);
    if (r > tol)
      rep.c1.fail("alpha_i(v_i) != 2 at " + pair_label(i, i));
    for (std::size_t j = 0; j < f; ++j)
      if (i != j && std::abs(m(i, j) - 2.0) <= tol)
        rep.c1.fail("off-diagonal entry equals 2 at " + pair_label(i, j));
  }

  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) {
      if (i == j)
        continue;
      rep.c2.worst = std::max(rep.c2.worst, m(i, j));
      if (m(i, j) > tol)
        rep.c2.fail("positive entry " + fmt(m(i, j)) + " at " + pair_label(i, j));
      if (std::abs(m(i, j)) <= tol && std::abs(m(j, i)) > tol)
        rep.c3.fail("zero at " + pair_label(i, j) + " but not at " + pair_label(j, i));
    }
  rep.c2.worst = std::max(rep.c2.worst, 0.0);

  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = i + 1; j < f; ++j) {
      const double prod = m(i, j) * m(j, i);
      const Order n = orders.at(i, j);
      if (n.is_infinite()) {
        const double deficit = std::max(0.0, 4.0 - prod);
        rep.c4.worst = std::max(rep.c4.worst, deficit);
        if (prod < 4.0 - tol)
          rep.c4.fail("infinite edge " + pair_label(i, j) + " has product " + fmt(prod) + " < 4");
      } else {
        const double r = std::abs(prod - mu(n));
        rep.c4.worst = std::max(rep.c4.worst, r);
        if (r > tol)
          rep.c4.fail("edge " + pair_label(i, j) + " of order " + n.to_string() + " has product " +
                      fmt(prod) + ", expected " + fmt(mu(n)));
      }
    }

  const auto rel = linear_relations(sys.alphas(), tol);
  if (rel.empty()) {
    rep.c5_certificate = "independent covectors: no linear relations";
  } else if (rel.size() > 1) {
    rep.c5_certificate = "covectors span too little";
    rep.c5.fail("relation space among the alphas has dimension " + std::to_string(rel.size()));
  } else if (is_quad_prism(orders)) {
    const Vec& c = rel.front();
    rep.c5_certificate = "concurrent sign pattern";
    if (std::abs(c[3]) <= tol) {
      rep.c5.fail("alpha_4 is not a combination of alpha_1, alpha_2, alpha_3");
    } else {
      // alpha_4 = d1 alpha_1 - d2 alpha_2 + d3 alpha_3
      const double d1 = -c[0] / c[3], d2 = c[1] / c[3], d3 = -c[2] / c[3];
      rep.c5.worst = -std::min({d1, d2, d3});
      if (!(d1 > tol && d2 > tol && d3 > tol))
        rep.c5.fail("alpha_4 = " + fmt(d1) + " alpha_1 - " + fmt(d2) + " alpha_2 + " + fmt(d3) +
                    " alpha_3 needs positive coefficients");
    }
  } else {
    rep.c5_certificate = "relation has mixed signs";
    const Vec& c = rel.front();
    const bool nonneg = std::ranges::all_of(c.values(), [&](double x) { return x >= -tol; });
    const bool nonpos = std::ranges::all_of(c.values(), [&](double x) { return x <= tol; });
    if (nonneg || nonpos)
      rep.c5.fail("a non-negative relation among the alphas is a row relation of M");
  }
  return rep;
}

bool relation_space_trivial(std::span<const Covec> alphas, const CartanMatrix& m, double tol) {
  if (alphas.size() != m.size())
    throw DimensionMismatch("relation_space_trivial: size mismatch");
  const auto rel = linear_relations(alphas, tol);
  if (rel.empty())
    return true;
  if (rel.size() > 1)
    throw UnsupportedShape("relation space of dimension " + std::to_string(rel.size()));
  const Vec& c = rel.front();
  const bool nonneg = std::ranges::all_of(c.values(), [&](double x) { return x >= -tol; });
  const bool nonpos = std::ranges::all_of(c.values(), [&](double x) { return x <= tol; });
  return !(nonneg || nonpos);
}

Cycle canonical_cycle(Cycle c) {
  if (c.empty())
    return c;
  auto lowest = std::ranges::min_element(c);
  std::rotate(c.begin(), lowest, c.end());
  return c;
}

Cycle reversed_cycle(const Cycle& c) {
  Cycle r(c.rbegin(), c.rend());
  return canonical_cycle(std::move(r));
}

std::string cycle_label(const Cycle& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k)
    s += (k ? "," : "") + std::to_string(c[k] + 1);
  return s + ")";
}

double CyclicInvariants::at(const Cycle& c) const {
  auto it = values_.find(canonical_cycle(c));
  if (it == values_.end())
    throw std::out_of_range("no cyclic invariant " + cycle_label(c));
  return it->second;
}

bool CyclicInvariants::contains(const Cycle& c) const {
  return values_.contains(canonical_cycle(c));
}

void CyclicInvariants::insert(const Cycle& c, double value) {
  values_[canonical_cycle(c)] = value;
}

double cyclic_product(const Mat& m, const Cycle& c) {
  double p = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k)
    p *= m(c[k], c[(k + 1) % c.size()]);
  return p;
}

CyclicInvariants cyclic_invariants(const CartanMatrix& m, std::size_t max_length) {
  CyclicInvariants inv;
  const std::size_t f = m.size();
  // every cycle starts at its smallest index; permute the remaining members
  for (std::size_t len = 2; len <= std::min(max_length, f); ++len) {
    std::vector<bool> choose(f, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(len), true);
    do {
      Cycle members;
      for (std::size_t i = 0; i < f; ++i)
        if (choose[i])
          members.push_back(i);
      Cycle c = members;
      do {
        inv.insert(c, cyclic_product(m.matrix(), c));
      } while (std::next_permutation(c.begin() + 1, c.end()));
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return inv;
}

bool IdentityReport::all_pass() const {
  return std::ranges::all_of(residuals, [](const IdentityResidual& r) { return r.pass; });
}

double IdentityReport::worst() const {
  double w = 0.0;
  for (const auto& r : residuals)
    w = std::max(w, r.residual);
  return w;
}

bool relative_close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * (1.0 + std::abs(x) + std::abs(y));
}

IdentityReport derived_invariant_identities(const CyclicInvariants& inv,
                                            const QuadPrismOrders& orders, double tol) {
  auto c = [&](std::initializer_list<std::size_t> one_based) {
    Cycle cyc;
    for (auto i : one_based)
      cyc.push_back(i - 1);
    return inv.at(cyc);
  };
  const double m12 = orders.mu12(), m23 = orders.mu23(), m34 = orders.mu34(), m14 = orders.mu14();
  const double i13 = c({1, 3}), i24 = c({2, 4});
  const double i123 = c({1, 2, 3}), i124 = c({1, 2, 4}), i134 = c({1, 3, 4});

  // The (2,4) edge is infinite, so the product M24 M42 stands in for mu in (1,3,4,2).
  const std::vector<std::pair<std::string, std::pair<double, double>>> rows = {
      {"(1,3,2)", {c({1, 3, 2}), m12 * m23 * i13 / i123}},
      {"(1,4,2)", {c({1, 4, 2}), m12 * m14 * i24 / i124}},
      {"(1,4,3)", {c({1, 4, 3}), m14 * m34 * i13 / i134}},
      {"(2,3,4)", {c({2, 3, 4}), i24 * i123 * i134 / (i13 * i124)}},
      {"(2,4,3)", {c({2, 4, 3}), m23 * m34 * i13 * i124 / (i123 * i134)}},
      {"(1,2,3,4)", {c({1, 2, 3, 4}), i123 * i134 / i13}},
      {"(1,2,4,3)", {c({1, 2, 4, 3}), m34 * i13 * i124 / i134}},
      {"(1,3,2,4)", {c({1, 3, 2, 4}), m23 * i13 * i124 / i123}},
      {"(1,3,4,2)", {c({1, 3, 4, 2}), m12 * i24 * i134 / i124}},
      {"(1,4,2,3)", {c({1, 4, 2, 3}), m14 * i24 * i123 / i124}},
      {"(1,4,3,2)", {c({1, 4, 3, 2}), m12 * m23 * m34 * m14 * i13 / (i123 * i134)}},
  };

  IdentityReport rep;
  for (const auto& [name, sides] : rows) {
    IdentityResidual r;
    r.name = name;
    r.lhs = sides.first;
    r.rhs = sides.second;
    r.residual = std::abs(r.lhs - r.rhs) / (1.0 + std::abs(r.lhs) + std::abs(r.rhs));
    r.pass = std::isfinite(r.residual) && r.residual <= tol;
    rep.residuals.push_back(std::move(r));
  }
  return rep;
}

bool projectively_equivalent(const CartanMatrix& m1, const CartanMatrix& m2, double tol) {
  if (m1.size() != m2.size())
    return false;
  if (m1.size() == 4) {
    const std::vector<Cycle> generators = {{0, 2}, {1, 3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
    return std::ranges::all_of(generators, [&](const Cycle& c) {
      return relative_close(cyclic_product(m1.matrix(), c), cyclic_product(m2.matrix(), c), tol);
    });
  }
  const auto a = cyclic_invariants(m1, m1.size());
  const auto b = cyclic_invariants(m2, m2.size());
  for (const auto& [cyc, value] : a.values())
    if (!relative_close(value, b.at(cyc), tol))
      return false;
  return true;
}

}  // namespace coxdef
