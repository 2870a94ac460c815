#include <numbers>

#include "benchmark/benchmark.h"
#include "muskatlab/estimator.hpp"
#include "muskatlab/grid.hpp"
#include "muskatlab/spectral.hpp"

namespace {

using namespace muskat;

RealField sample_field(int n) {
    EnsembleSpec spec;
    spec.grid = Grid::make(std::numbers::pi, n);
    spec.count = 1;
    spec.localization.enabled = true;
    return random_field(spec, 0);
}

void BM_ApplyLambda(benchmark::State& state) {
    const RealField u = sample_field(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(apply_lambda(u, 1.0));
}
BENCHMARK(BM_ApplyLambda)->RangeMultiplier(4)->Range(256, 4096);

void BM_Hilbert(benchmark::State& state) {
    const RealField u = sample_field(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hilbert(u));
}
BENCHMARK(BM_Hilbert)->RangeMultiplier(4)->Range(256, 4096);

void BM_HeatSemigroup(benchmark::State& state) {
    const RealField u = sample_field(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(heat_semigroup(u, 0.1));
}
BENCHMARK(BM_HeatSemigroup)->RangeMultiplier(4)->Range(256, 4096);

void BM_Translate(benchmark::State& state) {
    const RealField u = sample_field(static_cast<int>(state.range(0)));
    const double alpha = 0.37 * u.grid().spacing();
    for (auto _ : state) benchmark::DoNotOptimize(translate(u, alpha));
}
BENCHMARK(BM_Translate)->RangeMultiplier(4)->Range(256, 4096);

void BM_DealiasedProduct(benchmark::State& state) {
    const RealField u = sample_field(static_cast<int>(state.range(0)));
    const RealField v = derivative(u);
    for (auto _ : state) benchmark::DoNotOptimize(dealiased_product(u, v));
}
BENCHMARK(BM_DealiasedProduct)->RangeMultiplier(4)->Range(256, 4096);

}  // namespace

BENCHMARK_MAIN();
