#include <benchmark/benchmark.h>

#include <random>

#include "mubkit/mub.hpp"
#include "mubkit/phase_ring.hpp"
#include "mubkit/qdft.hpp"
#include "mubkit/weyl_pauli.hpp"

using namespace mubkit;

namespace {

static void BM_CyclotomicReduce(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Coeff> coeff(-static_cast<Coeff>(d) * d,
                                               static_cast<Coeff>(d) * d);
    GroupRingElement e(d);
    for (int k = 0; k < 2 * d; ++k) e.add_term(k, coeff(rng));
    for (auto _ : state) benchmark::DoNotOptimize(reduce(e));
}
BENCHMARK(BM_CyclotomicReduce)->Arg(4)->Arg(12)->Arg(31)->Arg(64);

static void BM_ExactUnbiasedPair(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const Basis b1 = basis_b0a(d, 0);
    const Basis b2 = basis_b0a(d, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_unbiased(b1, b2, Mode::Exact).passed);
}
BENCHMARK(BM_ExactUnbiasedPair)->Arg(3)->Arg(7)->Arg(13)->Arg(31);

static void BM_CompleteSetPrimeExact(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto bases = complete_set_prime(p, Mode::Exact);
        benchmark::DoNotOptimize(check_mutually_unbiased(bases, Mode::Exact).all_passed());
    }
}
BENCHMARK(BM_CompleteSetPrimeExact)->Arg(5)->Arg(7)->Arg(13);

static void BM_GaussSum(benchmark::State& state) {
    const long long w = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(gauss_sum_raw(1, -w - 2, w).value);
}
BENCHMARK(BM_GaussSum)->Arg(9)->Arg(33)->Arg(63);

static void BM_PartitionCheckExact(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_partition(p, Mode::Exact).passed);
}
BENCHMARK(BM_PartitionCheckExact)->Arg(3)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
