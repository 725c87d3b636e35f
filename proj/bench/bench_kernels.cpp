// Serial vs parallel kernels: dense series convolution and the twisted-sum
// row builder.  Run with --benchmark_filter to pick one family.

#include <benchmark/benchmark.h>

#include <random>

#include "pmod4/congruence.hpp"
#include "pmod4/series.hpp"

using namespace pmod4;

namespace {

Series<Mod4> dense_series(long N, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Mod4> c(std::size_t(N) + 1);
    for (auto& v : c) v = Mod4{std::uint8_t(rng() % 4)};
    c[0] = Mod4{1};
    return Series<Mod4>(0, std::move(c));
}

void BM_convolve(benchmark::State& state, MulPolicy policy) {
    const long N = state.range(0);
    auto a = dense_series(N, 1), b = dense_series(N, 2);
    for (auto _ : state) {
        auto c = Series<Mod4>::mul(a, b, policy);
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(N);
}

void BM_twisted_row(benchmark::State& state, bool parallel) {
    const long long D = 23;
    const long N = state.range(0);
    for (auto _ : state) {
        auto t = twisted_series<Mod4>(D, N, parallel);
        benchmark::DoNotOptimize(t);
    }
    state.SetComplexityN(N);
}

}  // namespace

BENCHMARK_CAPTURE(BM_convolve, serial, MulPolicy::Serial)
    ->RangeMultiplier(4)
    ->Range(256, 16384)
    ->Complexity();
BENCHMARK_CAPTURE(BM_convolve, parallel, MulPolicy::Parallel)
    ->RangeMultiplier(4)
    ->Range(256, 16384)
    ->Complexity();
BENCHMARK_CAPTURE(BM_twisted_row, serial, false)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(BM_twisted_row, parallel, true)->RangeMultiplier(2)->Range(64, 512);

BENCHMARK_MAIN();
