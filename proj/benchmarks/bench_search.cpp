#include <benchmark/benchmark.h>

#include "vclab/search.hpp"

static void BM_MaxIntersecting(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(vclab::max_intersecting(n, 3, false).best_size);
}
BENCHMARK(BM_MaxIntersecting)->Arg(6)->Arg(7);

static void BM_MaxVcFamily(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(vclab::max_vc_family(n, 2).best_size);
}
BENCHMARK(BM_MaxVcFamily)->Arg(5)->Arg(6);

static void BM_MaxSwitness(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(vclab::max_switness_family(n, 2, 2).best_size);
}
BENCHMARK(BM_MaxSwitness)->Arg(6)->Arg(7);
