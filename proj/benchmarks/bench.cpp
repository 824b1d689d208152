#include "coxdef/coxdef.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace coxdef;

void BM_BuildGeneral(benchmark::State& state) {
  ChartSampler s(1);
  const auto p = s.general(s.quad_orders());
  for (auto _ : state)
    benchmark::DoNotOptimize(build_general(p));
}
BENCHMARK(BM_BuildGeneral);

void BM_BuildStandard(benchmark::State& state) {
  ChartSampler s(1);
  const auto c = s.standard();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_standard(QuadPrismOrders{}, c));
}
BENCHMARK(BM_BuildStandard);

void BM_VerifyRelations(benchmark::State& state) {
  ChartSampler s(1);
  const auto o = QuadPrismOrders(3, 4, 5, 6);
  const auto sys = build_general(s.general(o));
  const auto edges = o.edge_orders();
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_relations(sys, edges));
}
BENCHMARK(BM_VerifyRelations);

void BM_CheckVinberg(benchmark::State& state) {
  ChartSampler s(1);
  const auto o = QuadPrismOrders{};
  const auto sys = build_concurrent(s.concurrent(o));
  const auto edges = o.edge_orders();
  for (auto _ : state)
    benchmark::DoNotOptimize(check_vinberg(sys, edges));
}
BENCHMARK(BM_CheckVinberg);

void BM_CyclicInvariants(benchmark::State& state) {
  ChartSampler s(1);
  const auto m = cartan_of(build_general(s.general(QuadPrismOrders{})));
  for (auto _ : state)
    benchmark::DoNotOptimize(cyclic_invariants(m));
}
BENCHMARK(BM_CyclicInvariants);

void BM_Scan(benchmark::State& state) {
  ScanConfig cfg;
  cfg.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_a4v44(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Scan)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
