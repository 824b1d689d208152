// Seeded random chart points.
//
// Negative coordinates are drawn as -exp(U[-2, 2]) and interior T values as
// 4 + exp(U[-3, 3]), covering a few orders of magnitude around 1.

#ifndef COXDEF_SAMPLING_HPP_
#define COXDEF_SAMPLING_HPP_

#include "coxdef/defspace.hpp"

#include <cstdint>
#include <random>

namespace coxdef {

class ChartSampler {
public:
  explicit ChartSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  // -exp(U[-2, 2])
  double negative();
  // -exp(U[log|lo|, log|hi|]) for a box [lo, hi] of negatives
  double log_uniform_negative(double lo, double hi);
  // 4 + exp(U[-3, 3])
  double t_value();
  int order(int lo = 3, int hi = 6);

  QuadPrismOrders quad_orders(int lo = 3, int hi = 6);
  GeneralChartParams general(const QuadPrismOrders& orders);
  ConcurrentChartParams concurrent(const QuadPrismOrders& orders);
  StandardCoordinates standard(double t13, double t24);
  StandardCoordinates standard();
  SimplexChartParams simplex(std::size_t n, int lo = 3, int hi = 6);

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace coxdef

#endif  // COXDEF_SAMPLING_HPP_
