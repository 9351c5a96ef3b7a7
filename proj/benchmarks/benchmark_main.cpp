// Stand-in for benchmark::benchmark_main: the distribution's static archive
// was built with a mismatched LTO version and cannot be linked here.
#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
