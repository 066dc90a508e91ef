// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "ptolemy/enumerate.hpp"

namespace {

void BM_BruteParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ptolemy::enumerate_brute(n));
}

void BM_BruteSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ptolemy::reference::enumerate_brute(n));
}

void BM_BurnsideParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ptolemy::count_orbits_burnside(n));
}

void BM_BurnsideSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ptolemy::reference::count_orbits_burnside(n));
}

void BM_Recursive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        ptolemy::enumerate_recursive(n, [&](const ptolemy::Diagram&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}

}  // namespace

BENCHMARK(BM_BruteParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BurnsideParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BurnsideSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Recursive)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
