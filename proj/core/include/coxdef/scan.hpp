// Parameter scans over the standard and concurrent charts.

#ifndef COXDEF_SCAN_HPP_
#define COXDEF_SCAN_HPP_

#include "coxdef/defspace.hpp"

#include <cstdint>
#include <vector>

namespace coxdef {

struct ScanConfig {
  QuadPrismOrders orders;
  double t13 = 6.0;
  double t24 = 6.0;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  // bounds for each of v23, v24, v34; sampled log-uniformly in |v|
  double box_lo = -10.0;
  double box_hi = -0.01;
  std::size_t buckets = 20;
  bool keep_records = false;

  void validate() const;
};

struct ScanRecord {
  StandardCoordinates coords;
  double a4v44 = 0.0;
  double det_m = 0.0;
  double t13_prod = 0.0;
  double t24_prod = 0.0;
};

struct Histogram {
  std::vector<double> edges;  // buckets + 1 edges spanning [min, max]
  std::vector<std::size_t> counts;
};

struct ScanResult {
  std::size_t evaluated = 0;
  std::size_t rejected = 0;  // singular or failing post-solve checks
  double min = 0.0;
  double max = 0.0;
  ScanRecord argmin;
  ScanRecord argmax;
  Histogram histogram;
  std::vector<ScanRecord> records;  // filled when keep_records
};

ScanRecord evaluate_standard(const QuadPrismOrders& orders, const StandardCoordinates& c);

// Samples (v23, v24, v34), solves for a4 v44 at fixed (T13, T24). Samples are
// drawn and reduced in index order, so results depend only on the config.
ScanResult scan_a4v44(const ScanConfig& config);

struct ConcurrentGridResult {
  std::size_t points = 0;
  double min_product = 0.0;  // min of T13 T24
  ConcurrentChartParams argmin;
};

// Log-spaced grid with `steps` values per coordinate of (v12, v23, v14, v34) in [lo, hi].
ConcurrentGridResult concurrent_product_grid(const QuadPrismOrders& orders, double lo, double hi,
                                             std::size_t steps);

// (T13, T24) of a concurrent chart point on the semisimple slice
std::pair<double, double> concurrent_products(const ConcurrentChartParams& p);

}  // namespace coxdef

#endif  // COXDEF_SCAN_HPP_
