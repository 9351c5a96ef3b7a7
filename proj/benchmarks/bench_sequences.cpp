#include <benchmark/benchmark.h>

#include "ordbell/sequences.hpp"
#include "ordbell/stirling.hpp"

namespace {

void BM_FubiniExact(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ordbell::fubini(count));
}
BENCHMARK(BM_FubiniExact)->Arg(50)->Arg(100)->Arg(200);

void BM_FubiniAlternating(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ordbell::fubini_alternating(count));
}
BENCHMARK(BM_FubiniAlternating)->Arg(50)->Arg(100)->Arg(200);

void BM_TransformRoundTrip(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const ordbell::BigSequence factorial_seq = ordbell::factorials(count);
  for (auto _ : state) {
    const ordbell::BigSequence weak =
        ordbell::transform_strong_to_weak(factorial_seq, count);
    benchmark::DoNotOptimize(ordbell::transform_weak_to_strong(weak, count));
  }
}
BENCHMARK(BM_TransformRoundTrip)->Arg(30)->Arg(60);

void BM_FubiniR(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ordbell::fubini_r(n, r));
}
BENCHMARK(BM_FubiniR)->Args({100, 3})->Args({100, 10})->Args({200, 10});

void BM_StirlingMatrix(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ordbell::stirling_matrix(ordbell::StirlingKind::second, size));
}
BENCHMARK(BM_StirlingMatrix)->Arg(30)->Arg(60)->Arg(120);

}  // namespace
