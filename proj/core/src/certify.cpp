#include "coxdef/certify.hpp"

#include "coxdef/sampling.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace coxdef {

namespace {

// Pair products are accumulated in long double: with M_ij M_ji in the hundreds,
// rounding in double alone reaches the relation tolerance.
using WideMat = std::vector<long double>;

WideMat wide_reflection(const ReflectionSystem& sys, std::size_t i) {
  const std::size_t d = sys.dim();
  WideMat r(d * d, 0.0L);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      r[a * d + b] = (a == b ? 1.0L : 0.0L) -
                     static_cast<long double>(sys.v(i)[a]) * static_cast<long double>(sys.alpha(i)[b]);
  return r;
}

WideMat wide_mul(const WideMat& x, const WideMat& y, std::size_t d) {
  WideMat z(d * d, 0.0L);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t b = 0; b < d; ++b)
        z[a * d + b] += x[a * d + k] * y[k * d + b];
  return z;
}

double distance_to_identity(const WideMat& x, std::size_t d) {
  long double s = 0.0L;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const long double e = x[a * d + b] - (a == b ? 1.0L : 0.0L);
      s += e * e;
    }
  return static_cast<double>(std::sqrt(s));
}

}  // namespace

bool RelationReport::all_pass() const {
  return std::ranges::all_of(generators, [](const GeneratorCheck& g) { return g.pass; }) &&
         std::ranges::all_of(pairs, [](const PairCheck& p) { return p.pass; });
}

double RelationReport::worst_finite_residual() const {
  double w = 0.0;
  for (const auto& g : generators)
    w = std::max(w, g.residual);
  for (const auto& p : pairs)
    if (!p.order.is_infinite())
      w = std::max(w, p.value);
  return w;
}

RelationReport verify_relations(const ReflectionSystem& sys, const EdgeOrders& orders, double tol) {
  if (orders.size() != sys.size())
    throw DimensionMismatch("edge order table does not match the number of sides");
  const std::size_t f = sys.size();
  const std::size_t d = sys.dim();
  std::vector<WideMat> r;
  for (std::size_t i = 0; i < f; ++i)
    r.push_back(wide_reflection(sys, i));

  RelationReport rep;
  for (std::size_t i = 0; i < f; ++i) {
    GeneratorCheck g;
    g.i = i;
    g.residual = distance_to_identity(wide_mul(r[i], r[i], d), d);
    g.pass = g.residual <= tol;
    rep.generators.push_back(g);
  }
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = i + 1; j < f; ++j) {
      PairCheck p;
      p.pair = {i, j};
      p.order = orders.at(i, j);
      if (p.order.is_infinite()) {
        p.value = pair(sys.alpha(i), sys.v(j)) * pair(sys.alpha(j), sys.v(i));
        p.plane_trace = p.value - 2.0;
        p.pass = p.value >= 4.0 - kTolAlg;
      } else {
        const auto n = static_cast<unsigned>(p.order.value());
        const WideMat rij = wide_mul(r[i], r[j], d);
        WideMat acc = rij;
        for (unsigned k = 1; k < n; ++k)
          acc = wide_mul(acc, rij, d);
        p.value = distance_to_identity(acc, d);
        p.pass = p.value <= tol;
      }
      rep.pairs.push_back(p);
    }
  return rep;
}

double det_defect(const CartanMatrix& m) {
  return (4.0 - m.product(0, 2)) * (4.0 - m.product(1, 3)) - det(m.matrix());
}

bool DetLocusReport::pass() const {
  return t13_slice.samples > 0 && t24_slice.samples > 0 && t13_slice.min_abs_det > threshold &&
         t24_slice.min_abs_det > threshold;
}

DetLocusReport det_locus_check(const QuadPrismOrders& orders, std::size_t samples,
                               std::uint64_t seed, double threshold) {
  if (samples == 0)
    throw std::invalid_argument("det_locus_check needs at least one sample");
  ChartSampler sampler(seed);
  DetLocusReport rep;
  rep.threshold = threshold;

  auto run = [&](SliceStats& stats, bool on_t13) {
    stats.min_abs_det = std::numeric_limits<double>::infinity();
    stats.min_e = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = sampler.t_value();
      const auto c = on_t13 ? sampler.standard(4.0, t) : sampler.standard(t, 4.0);
      const auto m = build_standard(orders, c).cartan();
      const double d = std::abs(det(m.matrix()));
      if (d < stats.min_abs_det) {
        stats.min_abs_det = d;
        stats.argmin = c;
      }
      stats.min_e = std::min(stats.min_e, det_defect(m));
      ++stats.samples;
    }
  };
  run(rep.t13_slice, true);
  run(rep.t24_slice, false);
  return rep;
}

std::optional<double> det_root_on_t13_ray(const QuadPrismOrders& orders,
                                          const StandardCoordinates& base, double t_max) {
  auto det_at = [&](double t) {
    StandardCoordinates c = base;
    c.t13 = t;
    return det(build_standard(orders, c).cartan().matrix());
  };
  double lo = 4.0;
  double f_lo = det_at(lo);
  if (f_lo == 0.0)
    return lo;
  for (double step = 1e-3; lo < t_max; step *= 2.0) {
    const double hi = std::min(4.0 + step, t_max);
    const double f_hi = det_at(hi);
    if (f_hi == 0.0)
      return hi;
    if ((f_lo < 0.0) != (f_hi < 0.0)) {
      boost::uintmax_t iters = 200;
      const auto [a, b] = boost::math::tools::toms748_solve(
          det_at, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(50), iters);
      return 0.5 * (a + b);
    }
    lo = hi;
    f_lo = f_hi;
  }
  return std::nullopt;
}

bool is_convex_cocompact(const CartanMatrix& m, const QuadPrismOrders&, double tol) {
  if (m.size() != 4)
    throw WrongDiagram("convex cocompactness test needs the 4-sided quadrilateral prism");
  return m.product(0, 2) > 4.0 + tol && m.product(1, 3) > 4.0 + tol;
}

bool is_convex_cocompact(const CartanMatrix& m, const EdgeOrders& orders, double tol) {
  QuadPrismOrders quad;
  try {
    quad = QuadPrismOrders::from(orders);
  } catch (const InvalidOrders& e) {
    throw WrongDiagram(e.what());
  }
  return is_convex_cocompact(m, quad, tol);
}

}  // namespace coxdef
