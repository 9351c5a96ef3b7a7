#include <benchmark/benchmark.h>

#include "ordbell/oracle.hpp"

namespace {

void BM_EnumerateWeakOrderings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ordbell::count_weak_orderings(n));
}
BENCHMARK(BM_EnumerateWeakOrderings)->DenseRange(6, 8);

void BM_CountRigged(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ordbell::count_rigged(n, r, ordbell::RiggedMode::relative_strong));
}
BENCHMARK(BM_CountRigged)->Args({7, 2})->Args({7, 4})->Args({8, 3});

void BM_CountCyclesSigned(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ordbell::count_cycles_signed(n, 2));
}
BENCHMARK(BM_CountCyclesSigned)->DenseRange(6, 9);

void BM_CountSetPartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ordbell::count_set_partitions(n, 4));
}
BENCHMARK(BM_CountSetPartitions)->DenseRange(9, 12);

}  // namespace
