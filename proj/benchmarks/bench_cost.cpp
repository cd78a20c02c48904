#include <benchmark/benchmark.h>

#include "skb/cost.hpp"
#include "skb/cost_oracle.hpp"

using skb::Rat;

static void BM_cost_closed_form(benchmark::State& state) {
    Rat t(17, 7), tv(-45, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(skb::cost(t, tv).value);
}
BENCHMARK(BM_cost_closed_form);

static void BM_bracket_bruteforce(benchmark::State& state) {
    Rat t(17, 7), tv(-45, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(skb::bracket_bruteforce(t, tv));
}
BENCHMARK(BM_bracket_bruteforce);

static void BM_legendre_bruteforce(benchmark::State& state) {
    Rat tv(-45, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(skb::legendre_star_bruteforce(tv));
}
BENCHMARK(BM_legendre_bruteforce);

BENCHMARK_MAIN();
