#include <benchmark/benchmark.h>

#include "ordbell/periodicity.hpp"

namespace {

// cost is O(count * min(K, count)) word operations
void BM_FubiniModSequence(benchmark::State& state) {
  const auto modulus = static_cast<std::uint64_t>(state.range(0));
  const auto count = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(ordbell::fubini_mod_sequence(modulus, count));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(count));
}
BENCHMARK(BM_FubiniModSequence)
    ->Args({97, 1000})
    ->Args({97, 10000})
    ->Args({97, 100000})
    ->Args({1000, 10000})
    ->Args({10007, 10000});

void BM_FubiniRModSequence(benchmark::State& state) {
  const auto modulus = static_cast<std::uint64_t>(state.range(0));
  const auto r = static_cast<unsigned>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(ordbell::fubini_r_mod_sequence(modulus, r, 10000));
}
BENCHMARK(BM_FubiniRModSequence)->Args({97, 1})->Args({97, 5})->Args({97, 20});

void BM_Analyze(benchmark::State& state) {
  const auto modulus = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ordbell::analyze(modulus, 0));
}
BENCHMARK(BM_Analyze)->Arg(97)->Arg(128)->Arg(195)->Arg(196);

}  // namespace
