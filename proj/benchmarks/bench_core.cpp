#include <benchmark/benchmark.h>

#include "vclab/extremal.hpp"
#include "vclab/polycert.hpp"
#include "vclab/shadow.hpp"
#include "vclab/vc.hpp"

static void BM_EnumerateKSubsets(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        vclab::KSubsetStream st(n, n / 2);
        vclab::SubsetMask m;
        std::uint64_t count = 0;
        while (st.next(m)) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateKSubsets)->Arg(16)->Arg(20)->Arg(24);

static void BM_VcDimensionMz(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    vclab::Family f = vclab::mz_family(n, 2, vclab::mz_assignment_constant(n, 2, 1)).family;
    for (auto _ : state) benchmark::DoNotOptimize(vclab::vc_dimension(f));
}
BENCHMARK(BM_VcDimensionMz)->Arg(8)->Arg(10)->Arg(12);

static void BM_SelectWitnesses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    vclab::Family st = vclab::star(n, 3, n);
    for (auto _ : state) benchmark::DoNotOptimize(vclab::select_witnesses(st, 2).size());
}
BENCHMARK(BM_SelectWitnesses)->Arg(8)->Arg(10)->Arg(12);

static void BM_ShadowComplete(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    vclab::Family f = vclab::complete_family(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(vclab::shadow_s(f, 3).size());
}
BENCHMARK(BM_ShadowComplete)->Arg(10)->Arg(12)->Arg(14);

static void BM_ExactRankStar(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    vclab::WitnessedFamily w = vclab::select_witnesses(vclab::star(n, 3, n), 2);
    vclab::YZSelection yz = vclab::greedy_select_yz(w, vclab::default_gamma(2));
    vclab::ExactMatrix mx = vclab::assemble_matrix(w, yz);
    for (auto _ : state) benchmark::DoNotOptimize(vclab::exact_rank(mx));
}
BENCHMARK(BM_ExactRankStar)->Arg(5)->Arg(6)->Arg(7);
