#include "coxdef/scan.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace coxdef {
namespace {

TEST(Scan, DeterministicPerSeed) {
  ScanConfig cfg;
  cfg.samples = 500;
  cfg.seed = 42;
  cfg.keep_records = true;
  const auto a = scan_a4v44(cfg);
  const auto b = scan_a4v44(cfg);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k)
    EXPECT_EQ(a.records[k].a4v44, b.records[k].a4v44);
  EXPECT_EQ(a.min, b.min);
  cfg.seed = 43;
  EXPECT_NE(scan_a4v44(cfg).min, a.min);
}

TEST(Scan, SingleSample) {
  ScanConfig cfg;
  cfg.samples = 1;
  cfg.keep_records = true;
  const auto r = scan_a4v44(cfg);
  ASSERT_EQ(r.evaluated + r.rejected, 1u);
  if (r.evaluated == 1) {
    EXPECT_EQ(r.min, r.max);
    EXPECT_EQ(r.records.front().a4v44, r.min);
  }
}

TEST(Scan, HistogramAccountsForEverySample) {
  ScanConfig cfg;
  cfg.samples = 3000;
  cfg.buckets = 7;
  const auto r = scan_a4v44(cfg);
  EXPECT_EQ(r.histogram.counts.size(), 7u);
  EXPECT_EQ(r.histogram.edges.size(), 8u);
  EXPECT_EQ(std::accumulate(r.histogram.counts.begin(), r.histogram.counts.end(), std::size_t{0}),
            r.evaluated);
  EXPECT_EQ(r.histogram.edges.front(), r.min);
  EXPECT_EQ(r.histogram.edges.back(), r.max);
}

TEST(Scan, RecordsMatchPointwiseEvaluation) {
  ScanConfig cfg;
  cfg.samples = 50;
  cfg.keep_records = true;
  for (const auto& rec : scan_a4v44(cfg).records) {
    const auto again = evaluate_standard(cfg.orders, rec.coords);
    EXPECT_EQ(again.a4v44, rec.a4v44);
    EXPECT_GE(rec.coords.v23, cfg.box_lo);
    EXPECT_LE(rec.coords.v23, cfg.box_hi);
    EXPECT_NEAR(rec.t13_prod, cfg.t13, 1e-9 * cfg.t13);
  }
}

TEST(Scan, LargeTReachesZero) {
  ScanConfig cfg;
  cfg.t13 = cfg.t24 = 16.0;
  cfg.samples = 20000;
  const auto r = scan_a4v44(cfg);
  EXPECT_LT(r.min, 0.05);
}

TEST(Scan, InvalidConfig) {
  ScanConfig cfg;
  cfg.samples = 0;
  EXPECT_THROW(scan_a4v44(cfg), std::invalid_argument);
  cfg = {};
  cfg.box_lo = -0.01;
  cfg.box_hi = -10.0;
  EXPECT_THROW(scan_a4v44(cfg), std::invalid_argument);
  cfg = {};
  cfg.t13 = 3.0;
  EXPECT_THROW(scan_a4v44(cfg), DomainError);
}

TEST(ConcurrentGrid, MinimumAtAllMinusOne) {
  const auto g = concurrent_product_grid(QuadPrismOrders{}, -10.0, -0.1, 5);
  EXPECT_EQ(g.points, 625u);
  // the 5-point log grid on [0.1, 10] contains 1
  EXPECT_NEAR(g.min_product, 256.0, 1e-9);
  EXPECT_NEAR(g.argmin.v12, -1.0, 1e-12);
  const auto [t13, t24] = concurrent_products(ConcurrentChartParams{});
  EXPECT_NEAR(t13 * t24, 256.0, 1e-9);
}

}  // namespace
}  // namespace coxdef
