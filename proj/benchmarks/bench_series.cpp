#include <benchmark/benchmark.h>

#include "skb/basis.hpp"
#include "skb/section.hpp"

static void BM_chart_expand(benchmark::State& state) {
    const int ab = static_cast<int>(state.range(0));
    skb::SectionBuilder builder;
    const skb::Section& s = builder.section(ab - 1, 1);
    const int D = skb::default_trunc_degree(ab);
    for (auto _ : state)
        benchmark::DoNotOptimize(skb::chart_expand(s, 1, D));
}
BENCHMARK(BM_chart_expand)->Arg(4)->Arg(6)->Arg(8);

static void BM_certified_profile(benchmark::State& state) {
    const int ab = static_cast<int>(state.range(0));
    skb::SectionBuilder builder;
    const skb::Section& s = builder.section(ab - 1, 1);
    const int D = skb::default_trunc_degree(ab);
    for (auto _ : state)
        benchmark::DoNotOptimize(skb::certified_valuation_profile(s, 1, D).pl.values().size());
}
BENCHMARK(BM_certified_profile)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
