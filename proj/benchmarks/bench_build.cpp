#include <benchmark/benchmark.h>

#include "skb/basis.hpp"
#include "skb/verify.hpp"

static void BM_build_basis(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        skb::SectionBuilder builder;  // fresh cache each round
        benchmark::DoNotOptimize(skb::build_basis(d, builder).entries.size());
    }
}
BENCHMARK(BM_build_basis)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_verify_basis(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    auto basis = skb::build_basis(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(skb::verify_theorem(basis).ok());
}
BENCHMARK(BM_verify_basis)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
