// Serial reference vs OpenMP kernel for each batch workload.
#include <benchmark/benchmark.h>

#include "truncgal/sweep.hpp"

using namespace truncgal;

namespace {

void BM_ClassifyRangeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_range_serial(6, 4, 4 + state.range(0), {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifyRangeParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_range_parallel(6, 4, 4 + state.range(0), {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BruteExceptionalSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_exceptional_serial(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BruteExceptionalParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_exceptional_parallel(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CensusSerial(benchmark::State& state) {
  const auto params = FamilyParams::from_rt(6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_type_census_serial(params, static_cast<u64>(state.range(0))));
}

void BM_CensusParallel(benchmark::State& state) {
  const auto params = FamilyParams::from_rt(6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_type_census_parallel(params, static_cast<u64>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_ClassifyRangeSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyRangeParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BruteExceptionalSerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteExceptionalParallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CensusSerial)->Arg(10'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(10'000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
