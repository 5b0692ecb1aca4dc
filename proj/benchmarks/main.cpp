#include <benchmark/benchmark.h>

// Own main: the packaged libbenchmark_main.a carries LTO bytecode from another gcc.
BENCHMARK_MAIN();
