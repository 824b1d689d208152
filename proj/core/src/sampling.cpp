#include "coxdef/sampling.hpp"

#include <cmath>

namespace coxdef {

double ChartSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

double ChartSampler::negative() {
  return -std::exp(uniform(-2.0, 2.0));
}

double ChartSampler::log_uniform_negative(double lo, double hi) {
  const double a = std::log(-hi), b = std::log(-lo);
  return -std::exp(uniform(a, b));
}

double ChartSampler::t_value() {
  return 4.0 + std::exp(uniform(-3.0, 3.0));
}

int ChartSampler::order(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

QuadPrismOrders ChartSampler::quad_orders(int lo, int hi) {
  const int n12 = order(lo, hi), n23 = order(lo, hi), n34 = order(lo, hi), n14 = order(lo, hi);
  return QuadPrismOrders(n12, n23, n34, n14);
}

GeneralChartParams ChartSampler::general(const QuadPrismOrders& orders) {
  GeneralChartParams p;
  p.orders = orders;
  p.t13 = t_value();
  p.t24 = t_value();
  p.v23 = negative();
  p.v24 = negative();
  p.v34 = negative();
  return p;
}

ConcurrentChartParams ChartSampler::concurrent(const QuadPrismOrders& orders) {
  ConcurrentChartParams p;
  p.orders = orders;
  p.v12 = negative();
  p.v23 = negative();
  p.v14 = negative();
  p.v34 = negative();
  p.v44 = 0.0;
  return p;
}

StandardCoordinates ChartSampler::standard(double t13, double t24) {
  StandardCoordinates c;
  c.t13 = t13;
  c.t24 = t24;
  c.v23 = negative();
  c.v24 = negative();
  c.v34 = negative();
  return c;
}

StandardCoordinates ChartSampler::standard() {
  const double t13 = t_value();
  const double t24 = t_value();
  return standard(t13, t24);
}

SimplexChartParams ChartSampler::simplex(std::size_t n, int lo, int hi) {
  SimplexChartParams p;
  p.n = n;
  p.orders = EdgeOrders(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      p.orders.set(i, j, Order::finite(order(lo, hi)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (p.orders.at(i, j).value() != 2)
        p.free_entries[{i, j}] = negative();
  return p;
}

}  // namespace coxdef
