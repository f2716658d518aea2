#include <benchmark/benchmark.h>

#include "contractions/dual.hpp"
#include "contractions/enumerate.hpp"
#include "contractions/formulas.hpp"

using namespace contractions;

static void BM_EnumerateFilteredI(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    enumerate_filtered(n, Family::I,
                       [&](const PartialInjection&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateFilteredI)->DenseRange(4, 7);

static void BM_EnumerateDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    enumerate_direct(n, Family::ORCI,
                     [&](const PartialInjection&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateDirect)->DenseRange(6, 12)->Unit(benchmark::kMillisecond);

static void BM_CountByHeightWorkers(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        count_by_height(12, Family::OCI, CountMethod::direct, workers));
  }
}
BENCHMARK(BM_CountByHeightWorkers)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

static void BM_OrderOci(benchmark::State& state) {
  const auto method = static_cast<OrderMethod>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(order_oci(200, method));
  }
}
BENCHMARK(BM_OrderOci)
    ->Arg(static_cast<int>(OrderMethod::closed))
    ->Arg(static_cast<int>(OrderMethod::recurrence))
    ->Arg(static_cast<int>(OrderMethod::summation));

static void BM_Theta(benchmark::State& state) {
  const auto maps = collect_direct(10, Family::OCI);
  for (auto _ : state) {
    for (const PartialInjection& alpha : maps) {
      benchmark::DoNotOptimize(theta(alpha));
    }
  }
}
BENCHMARK(BM_Theta)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
