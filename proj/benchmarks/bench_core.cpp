#include <benchmark/benchmark.h>

#include "surfdiag/equivalence.hpp"
#include "surfdiag/fixtures.hpp"
#include "surfdiag/reduce.hpp"

using namespace surfdiag;

static void BM_NormalCodePair(benchmark::State& state) {
    auto d = pair_diagram(3);
    for (auto _ : state) benchmark::DoNotOptimize(normal_code(d));
}
BENCHMARK(BM_NormalCodePair);

static void BM_NormalCodeChain(benchmark::State& state) {
    auto d = chain_diagram(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(normal_code(d));
}
BENCHMARK(BM_NormalCodeChain)->Arg(4)->Arg(7);

static void BM_ValidateStrictChain(benchmark::State& state) {
    auto d = chain_diagram(3, 6);
    for (auto _ : state) benchmark::DoNotOptimize(validate(d, true));
}
BENCHMARK(BM_ValidateStrictChain);

static void BM_ReduceAllChain(benchmark::State& state) {
    auto d = chain_diagram(3, 6);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_all_pairs(d));
}
BENCHMARK(BM_ReduceAllChain);

BENCHMARK_MAIN();
