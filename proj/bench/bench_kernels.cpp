// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "lmss/fuzz.hpp"
#include "lmss/generator.hpp"
#include "lmss/stability.hpp"

namespace {

lmss::Graph bench_tree(std::size_t n) {
    return lmss::generate_random_unicycle({n, std::nullopt, lmss::Parity::any, 7, true});
}

void BM_PsiSerial(benchmark::State& state) {
    auto g = bench_tree(static_cast<std::size_t>(state.range(0)));
    lmss::Limits limits{64, 64};
    for (auto _ : state) benchmark::DoNotOptimize(lmss::enumerate_psi_serial(g, limits));
}

void BM_PsiParallel(benchmark::State& state) {
    auto g = bench_tree(static_cast<std::size_t>(state.range(0)));
    lmss::Limits limits{64, 64};
    for (auto _ : state) benchmark::DoNotOptimize(lmss::enumerate_psi(g, limits));
}

lmss::Campaign bench_campaign() {
    lmss::Campaign c;
    c.count = 32;
    c.max_n = 12;
    c.family = lmss::Family::any;
    c.seed = 2024;
    return c;
}

void BM_FuzzSerial(benchmark::State& state) {
    auto c = bench_campaign();
    for (auto _ : state) benchmark::DoNotOptimize(lmss::run_fuzz_serial(c));
}

void BM_FuzzParallel(benchmark::State& state) {
    auto c = bench_campaign();
    for (auto _ : state) benchmark::DoNotOptimize(lmss::run_fuzz(c));
}

}  // namespace

BENCHMARK(BM_PsiSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsiParallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
