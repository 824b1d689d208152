#include "coxdef/defspace.hpp"

#include <cmath>
#include <sstream>

namespace coxdef {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

void require_negative(double x, const char* name) {
  if (!std::isfinite(x) || !(x < 0.0))
    throw DomainError(std::string(name) + " must be negative, got " + fmt(x));
}

void require_t(double t, const char* name) {
  if (!std::isfinite(t) || !(t >= 4.0))
    throw DomainError(std::string(name) + " must be >= 4, got " + fmt(t));
}

Covec e_star(std::size_t i) { return Covec::basis(4, i); }

ReflectionSystem standard_system(const QuadPrismOrders& o, const StandardCoordinates& c,
                                 double a1, double a2, double a3, double a4, double v44) {
  std::vector<Covec> alphas = {e_star(0), e_star(1), e_star(2), Covec{a1, a2, a3, a4}};
  std::vector<Vec> vs = {
      Vec{2.0, -1.0, -1.0, 0.0},
      Vec{-o.mu12(), 2.0, o.mu23() / c.v23, 0.0},
      Vec{-c.t13, c.v23, 2.0, 0.0},
      Vec{-1.0, c.v24, c.v34, v44},
  };
  return ReflectionSystem(std::move(alphas), std::move(vs));
}

}  // namespace

void GeneralChartParams::validate() const {
  require_t(t13, "T13");
  require_t(t24, "T24");
  require_negative(v23, "v23");
  require_negative(v24, "v24");
  require_negative(v34, "v34");
}

void ConcurrentChartParams::validate() const {
  require_negative(v12, "v12");
  require_negative(v23, "v23");
  require_negative(v14, "v14");
  require_negative(v34, "v34");
  if (!std::isfinite(v44))
    throw DomainError("v44 must be finite");
}

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::I: return "I";
    case CaseLabel::IPrime: return "I'";
    case CaseLabel::II: return "II";
    case CaseLabel::III: return "III";
  }
  return "?";
}

ReflectionSystem build_general(const GeneralChartParams& p) {
  p.validate();
  const auto& o = p.orders;
  const double v13 = -p.t13;
  const double v42 = p.t24 / p.v24;
  // columns of [v]; alpha_j = e_j^*, so [v] is the Cartan matrix
  std::vector<Vec> vs = {
      Vec{2.0, -1.0, -1.0, -1.0},
      Vec{-o.mu12(), 2.0, o.mu23() / p.v23, v42},
      Vec{v13, p.v23, 2.0, o.mu34() / p.v34},
      Vec{-o.mu14(), p.v24, p.v34, 2.0},
  };
  std::vector<Covec> alphas = {e_star(0), e_star(1), e_star(2), e_star(3)};
  return ReflectionSystem(std::move(alphas), std::move(vs));
}

ReflectionSystem build_concurrent(const ConcurrentChartParams& p) {
  p.validate();
  const auto& o = p.orders;
  const double v21 = o.mu12() / p.v12;
  const double v31 = o.mu14() / p.v14 + o.mu12() / p.v12 - 2.0;
  const double v32 = o.mu23() / p.v23;
  const double v13 = p.v23 + o.mu34() / p.v34 - 2.0;
  const double v24 = p.v14 + p.v34 - 2.0;
  std::vector<Vec> vs = {
      Vec{2.0, v21, v31, 0.0},
      Vec{p.v12, 2.0, v32, 0.0},
      Vec{v13, p.v23, 2.0, 0.0},
      Vec{p.v14, v24, p.v34, p.v44},
  };
  std::vector<Covec> alphas = {e_star(0), e_star(1), e_star(2), Covec{1.0, -1.0, 1.0, 0.0}};
  return ReflectionSystem(std::move(alphas), std::move(vs));
}

StandardChartPoint build_standard(const QuadPrismOrders& orders, const StandardCoordinates& c,
                                  double tol) {
  require_t(c.t13, "T13");
  require_t(c.t24, "T24");
  require_negative(c.v23, "v23");
  require_negative(c.v24, "v24");
  require_negative(c.v34, "v34");

  const double mu12 = orders.mu12(), mu23 = orders.mu23(), mu34 = orders.mu34(),
               mu14 = orders.mu14();
  const double v13 = -c.t13;
  const Mat system = {
      {2.0, -1.0, -1.0, 0.0},
      {-mu12, 2.0, mu23 / c.v23, 0.0},
      {v13, c.v23, 2.0, 0.0},
      {-1.0, c.v24, c.v34, 1.0},
  };
  const Vec rhs{-mu14, c.t24 / c.v24, mu34 / c.v34, 2.0};

  Vec x(4);
  try {
    x = solve(system, rhs);
  } catch (const SingularMatrix&) {
    throw SingularSystem("standard-position system is singular");
  }

  StandardChartPoint pt;
  pt.orders = orders;
  pt.coords = c;
  pt.a1 = x[0];
  pt.a2 = x[1];
  pt.a3 = x[2];
  pt.a4v44 = x[3];

  // rows (2), (4), (5) of the Vinberg system, then inequality (3)
  auto check = [&](double lhs, double rhs_value, double scale, const char* what) {
    const double r = std::abs(lhs - rhs_value) / (1.0 + scale);
    if (!(r <= tol))
      throw ConditionFailure(std::string(what) + " residual " + fmt(r));
  };
  const double a1 = pt.a1, a2 = pt.a2, a3 = pt.a3;
  check(-(2 * a1 - a2 - a3), mu14, std::abs(2 * a1) + std::abs(a2) + std::abs(a3), "M14 M41");
  check(a1 * v13 + a2 * c.v23 + 2 * a3, mu34 / c.v34,
        std::abs(a1 * v13) + std::abs(a2 * c.v23) + std::abs(2 * a3), "M34 M43");
  check(-a1 + a2 * c.v24 + a3 * c.v34 + pt.a4v44, 2.0,
        std::abs(a1) + std::abs(a2 * c.v24) + std::abs(a3 * c.v34) + std::abs(pt.a4v44),
        "alpha_4(v_4)");
  const double m42 = -a1 * mu12 + 2 * a2 + a3 * mu23 / c.v23;
  if (!(c.v24 * m42 >= 4.0 - tol))
    throw ConditionFailure("M24 M42 = " + fmt(c.v24 * m42) + " < 4");
  return pt;
}

CartanMatrix StandardChartPoint::cartan() const {
  // a4 = 1 represents every point; the pairing matrix is gauge invariant
  return cartan_of(standard_system(orders, coords, a1, a2, a3, 1.0, a4v44));
}

bool StandardChartPoint::admits_concurrent(double tol) const {
  return std::abs(a4v44) <= tol && a1 > 0.0 && a2 < 0.0 && a3 > 0.0;
}

std::size_t SimplexChartParams::parameter_count() const {
  std::size_t count = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (orders.at(i, j).value() != 2)
        ++count;
  return count;
}

void SimplexChartParams::validate() const {
  if (n < 1 || n + 1 > kMaxDim)
    throw DomainError("simplex dimension must be in 1.." + std::to_string(kMaxDim - 1));
  if (orders.size() != n + 1)
    throw DomainError("simplex edge orders must cover n + 1 sides");
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (orders.at(i, j).is_infinite())
        throw DomainError("simplex chart needs finite edge orders");
  for (const auto& [ij, value] : free_entries) {
    if (ij.i < 1 || ij.i >= ij.j || ij.j > n)
      throw DomainError("free entry (" + std::to_string(ij.i + 1) + "," + std::to_string(ij.j + 1) +
                        ") is not above the diagonal outside the first row");
    if (orders.at(ij.i, ij.j).value() == 2)
      throw DomainError("order-2 pairs carry no free entry");
    require_negative(value, "free entry v_ij");
  }
  if (free_entries.size() != parameter_count())
    throw DomainError("simplex chart needs " + std::to_string(parameter_count()) +
                      " free entries, got " + std::to_string(free_entries.size()));
}

ReflectionSystem build_simplex(const SimplexChartParams& p) {
  p.validate();
  const std::size_t d = p.n + 1;
  Mat v = Mat::identity(d);
  v = 2.0 * v;
  for (std::size_t j = 1; j < d; ++j) {
    const double m = mu(p.orders.at(0, j));
    v = v.with(0, j, m == 0.0 ? 0.0 : -m);
    v = v.with(j, 0, m == 0.0 ? 0.0 : -1.0);
  }
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Order n = p.orders.at(i, j);
      if (n.value() == 2)
        continue;
      const double vij = p.free_entries.at({i, j});
      v = v.with(i, j, vij);
      v = v.with(j, i, mu(n) / vij);
    }
  std::vector<Covec> alphas;
  std::vector<Vec> vs;
  for (std::size_t j = 0; j < d; ++j) {
    alphas.push_back(Covec::basis(d, j));
    vs.push_back(v.column(j));
  }
  return ReflectionSystem(std::move(alphas), std::move(vs));
}

bool is_semisimple(const ReflectionSystem& sys, double tol) {
  const std::size_t d = sys.dim();
  const auto kernel = common_kernel(sys.alphas(), d, tol);
  const std::size_t dim_span = rank_of(sys.vs(), tol);
  if (kernel.size() + dim_span != d)
    return false;
  std::vector<Vec> stacked = kernel;
  stacked.insert(stacked.end(), sys.vs().begin(), sys.vs().end());
  return rank_of(stacked, tol) == d;
}

CaseLabel classify_case(double a4, double v44, double tol) {
  const bool a4_zero = std::abs(a4) <= tol;
  const bool v44_zero = std::abs(v44) <= tol;
  if (!a4_zero)
    return v44_zero ? CaseLabel::IPrime : CaseLabel::I;
  return v44_zero ? CaseLabel::III : CaseLabel::II;
}

ReflectionSystem realize_representation(const StandardChartPoint& pt, double a4, double free_v44,
                                        double tol) {
  double v44 = 0.0;
  if (std::abs(pt.a4v44) > tol) {
    if (std::abs(a4) <= tol)
      throw GaugeError("a4 = 0 cannot realize a4 v44 = " + fmt(pt.a4v44));
    v44 = pt.a4v44 / a4;
  } else if (std::abs(a4) <= tol) {
    a4 = 0.0;
    v44 = free_v44;
  }
  return standard_system(pt.orders, pt.coords, pt.a1, pt.a2, pt.a3, a4, v44);
}

std::array<double, 4> standard_gauge(const CartanMatrix& m) {
  if (m.size() != 4)
    throw DimensionMismatch("standard gauge needs a 4x4 Cartan matrix");
  if (!(m(1, 0) < 0.0 && m(2, 0) < 0.0 && m(0, 3) < 0.0))
    throw DomainError("standard gauge needs M21, M31, M14 < 0");
  return {1.0, -m(1, 0), -m(2, 0), -1.0 / m(0, 3)};
}

StandardCoordinates standard_coordinates(const CartanMatrix& m) {
  const auto c = standard_gauge(m);
  // (D^{-1} M D)_ij = M_ij c_j / c_i
  StandardCoordinates s;
  s.t13 = m.product(0, 2);
  s.t24 = m.product(1, 3);
  s.v23 = m(1, 2) * c[2] / c[1];
  s.v24 = m(1, 3) * c[3] / c[1];
  s.v34 = m(2, 3) * c[3] / c[2];
  return s;
}

double leading_det3(const CartanMatrix& m) {
  return det(m.matrix().leading_block(3));
}

}  // namespace coxdef
