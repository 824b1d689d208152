#include "coxdef/scan.hpp"

#include "coxdef/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coxdef {

void ScanConfig::validate() const {
  if (samples == 0)
    throw std::invalid_argument("scan needs at least one sample");
  if (buckets == 0)
    throw std::invalid_argument("scan needs at least one histogram bucket");
  if (!(box_lo < box_hi && box_hi < 0.0))
    throw std::invalid_argument("scan box must satisfy lo < hi < 0");
  if (!(t13 >= 4.0 && t24 >= 4.0))
    throw DomainError("scan needs T13, T24 >= 4");
}

ScanRecord evaluate_standard(const QuadPrismOrders& orders, const StandardCoordinates& c) {
  const auto pt = build_standard(orders, c);
  const auto m = pt.cartan();
  ScanRecord r;
  r.coords = c;
  r.a4v44 = pt.a4v44;
  r.det_m = det(m.matrix());
  r.t13_prod = m.product(0, 2);
  r.t24_prod = m.product(1, 3);
  return r;
}

ScanResult scan_a4v44(const ScanConfig& config) {
  config.validate();
  ChartSampler sampler(config.seed);
  ScanResult res;
  res.min = std::numeric_limits<double>::infinity();
  res.max = -std::numeric_limits<double>::infinity();
  std::vector<double> values;
  values.reserve(config.samples);

  for (std::size_t k = 0; k < config.samples; ++k) {
    StandardCoordinates c;
    c.t13 = config.t13;
    c.t24 = config.t24;
    c.v23 = sampler.log_uniform_negative(config.box_lo, config.box_hi);
    c.v24 = sampler.log_uniform_negative(config.box_lo, config.box_hi);
    c.v34 = sampler.log_uniform_negative(config.box_lo, config.box_hi);
    ScanRecord r;
    try {
      r = evaluate_standard(config.orders, c);
    } catch (const SingularSystem&) {
      ++res.rejected;
      continue;
    } catch (const ConditionFailure&) {
      ++res.rejected;
      continue;
    }
    ++res.evaluated;
    values.push_back(r.a4v44);
    if (r.a4v44 < res.min) {
      res.min = r.a4v44;
      res.argmin = r;
    }
    if (r.a4v44 > res.max) {
      res.max = r.a4v44;
      res.argmax = r;
    }
    if (config.keep_records)
      res.records.push_back(r);
  }

  if (res.evaluated == 0)
    return res;
  auto& h = res.histogram;
  const double width = (res.max - res.min) / static_cast<double>(config.buckets);
  for (std::size_t b = 0; b <= config.buckets; ++b)
    h.edges.push_back(b == config.buckets ? res.max : res.min + width * static_cast<double>(b));
  h.counts.assign(config.buckets, 0);
  for (double x : values) {
    std::size_t b = width > 0.0 ? static_cast<std::size_t>((x - res.min) / width) : 0;
    ++h.counts[std::min(b, config.buckets - 1)];
  }
  return res;
}

std::pair<double, double> concurrent_products(const ConcurrentChartParams& p) {
  const auto m = cartan_of(build_concurrent(p));
  return {m.product(0, 2), m.product(1, 3)};
}

ConcurrentGridResult concurrent_product_grid(const QuadPrismOrders& orders, double lo, double hi,
                                             std::size_t steps) {
  if (!(lo < hi && hi < 0.0) || steps < 2)
    throw std::invalid_argument("grid needs lo < hi < 0 and at least two steps");
  std::vector<double> axis;
  const double a = std::log(-hi), b = std::log(-lo);
  for (std::size_t k = 0; k < steps; ++k)
    axis.push_back(-std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(steps - 1)));

  ConcurrentGridResult res;
  res.min_product = std::numeric_limits<double>::infinity();
  ConcurrentChartParams p;
  p.orders = orders;
  for (double v12 : axis)
    for (double v23 : axis)
      for (double v14 : axis)
        for (double v34 : axis) {
          p.v12 = v12;
          p.v23 = v23;
          p.v14 = v14;
          p.v34 = v34;
          const auto [t13, t24] = concurrent_products(p);
          ++res.points;
          if (t13 * t24 < res.min_product) {
            res.min_product = t13 * t24;
            res.argmin = p;
          }
        }
  return res;
}

}  // namespace coxdef
