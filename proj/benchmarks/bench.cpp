#include <benchmark/benchmark.h>

#include <random>

#include "nuosc/matter.hpp"
#include "nuosc/pipeline.hpp"
#include "nuosc/pmns.hpp"
#include "nuosc/random.hpp"
#include "nuosc/synthesis.hpp"

namespace {

using namespace nuosc;

void BM_BuildPmns(benchmark::State& state) {
    const OscParams p;
    for (auto _ : state) benchmark::DoNotOptimize(build_pmns(p));
}
BENCHMARK(BM_BuildPmns);

void BM_ClosedFormProbability(benchmark::State& state) {
    const OscParams p;
    const Baseline b = Baseline::from_l_over_e(500.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(probability_closed_form(p, b, Flavor::mu, Flavor::e));
}
BENCHMARK(BM_ClosedFormProbability);

void BM_ExactMatterProbability(benchmark::State& state) {
    const OscParams p;
    const MatterContext ctx(0.5, 1e-4);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            matter_probability(p, ctx, 400.0, Flavor::mu, Flavor::e, MatterMode::Exact));
}
BENCHMARK(BM_ExactMatterProbability);

void BM_ApproxEffectiveParams(benchmark::State& state) {
    const OscParams p;
    const MatterContext ctx(0.5, 1e-4);
    for (auto _ : state) benchmark::DoNotOptimize(approx_effective_params(p, ctx));
}
BENCHMARK(BM_ApproxEffectiveParams);

void BM_WeylDecompose(benchmark::State& state) {
    std::mt19937_64 gen(12);
    const Matrix4 u = random_unitary4(gen);
    for (auto _ : state) benchmark::DoNotOptimize(weyl_decompose(u));
}
BENCHMARK(BM_WeylDecompose);

void BM_Synthesize(benchmark::State& state) {
    std::mt19937_64 gen(12);
    const Matrix4 u = random_unitary4(gen);
    for (auto _ : state) benchmark::DoNotOptimize(synthesize(u));
}
BENCHMARK(BM_Synthesize);

void BM_PipelineCircuitBackend(benchmark::State& state) {
    const OscParams p;
    const Baseline b = Baseline::from_l_over_e(500.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_pipeline(p, b, Flavor::mu, PipelineBackend::Circuit));
}
BENCHMARK(BM_PipelineCircuitBackend);

}  // namespace

BENCHMARK_MAIN();
