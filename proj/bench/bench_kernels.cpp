#include <benchmark/benchmark.h>

#include "dyckbij/kernels.hpp"

using namespace dyckbij::kernels;

namespace {

void bench_kernel(benchmark::State& state, Kernel serial, Kernel parallel) {
    const int n = static_cast<int>(state.range(0));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        SweepResult res = run(serial, parallel, n, jobs);
        benchmark::DoNotOptimize(res);
    }
}

SweepResult count_1234_serial(int n) { return count_avoiding_serial(n, 4); }
SweepResult count_1234_parallel(int n) { return count_avoiding_parallel(n, 4); }

void args(benchmark::internal::Benchmark* b, int n) {
    for (int jobs : {1, 2, 4, 8}) b->Args({n, jobs});
}

}  // namespace

BENCHMARK_CAPTURE(bench_kernel, count_1234, count_1234_serial, count_1234_parallel)
    ->Apply([](auto* b) { args(b, 9); })
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(bench_kernel, theorem6, theorem6_violations_serial,
                  theorem6_violations_parallel)
    ->Apply([](auto* b) { args(b, 8); })
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(bench_kernel, roundtrip, roundtrip_violations_serial,
                  roundtrip_violations_parallel)
    ->Apply([](auto* b) { args(b, 8); })
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(bench_kernel, prop4, prop4_violations_serial, prop4_violations_parallel)
    ->Apply([](auto* b) { args(b, 8); })
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
