#include <numbers>

#include "benchmark/benchmark.h"
#include "muskatlab/estimator.hpp"
#include "muskatlab/evolution.hpp"
#include "muskatlab/finite_diff.hpp"
#include "muskatlab/muskat.hpp"
#include "muskatlab/norms.hpp"

namespace {

using namespace muskat;

RealField sample_field(int n) {
    EnsembleSpec spec;
    spec.grid = Grid::make(std::numbers::pi, n);
    spec.count = 1;
    spec.localization.enabled = true;
    return random_field(spec, 0);
}

void BM_TOperator(benchmark::State& state) {
    const RealField f = sample_field(static_cast<int>(state.range(0)));
    const AlphaRule rule = AlphaRule::trapezoid_grid_rule(f.grid());
    for (auto _ : state) benchmark::DoNotOptimize(t_operator(f, f, rule));
}
BENCHMARK(BM_TOperator)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);

void BM_Drift(benchmark::State& state) {
    const RealField f = sample_field(static_cast<int>(state.range(0)));
    const AlphaRule rule = AlphaRule::trapezoid_grid_rule(f.grid());
    for (auto _ : state) benchmark::DoNotOptimize(drift(f, rule));
}
BENCHMARK(BM_Drift)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);

void BM_QuadratureLambda(benchmark::State& state) {
    const RealField u = sample_field(static_cast<int>(state.range(0)));
    const AlphaRule rule = AlphaRule::trapezoid_grid_rule(u.grid());
    for (auto _ : state) benchmark::DoNotOptimize(quadrature_lambda(u, rule));
}
BENCHMARK(BM_QuadratureLambda)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);

void BM_BesovNorm(benchmark::State& state) {
    const RealField u = sample_field(static_cast<int>(state.range(0)));
    BesovSpec spec;
    spec.s = 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(besov_norm(u, spec));
}
BENCHMARK(BM_BesovNorm)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);

void BM_EtdStep(benchmark::State& state) {
    SimConfig cfg;
    cfg.grid = Grid::make(std::numbers::pi, static_cast<int>(state.range(0)));
    cfg.profile.amplitude = 0.3;
    const SimState s0 = make_state(0.0, make_profile(cfg.grid, cfg.profile), cfg);
    for (auto _ : state) benchmark::DoNotOptimize(step(s0, cfg));
}
BENCHMARK(BM_EtdStep)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);

void BM_RandomField(benchmark::State& state) {
    EnsembleSpec spec;
    spec.grid = Grid::make(std::numbers::pi, static_cast<int>(state.range(0)));
    spec.count = 1;
    spec.localization.enabled = true;
    for (auto _ : state) benchmark::DoNotOptimize(random_field(spec, 0));
}
BENCHMARK(BM_RandomField)->RangeMultiplier(2)->Range(256, 2048);

}  // namespace

BENCHMARK_MAIN();
