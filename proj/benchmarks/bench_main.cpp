#include <benchmark/benchmark.h>

#include "tautilt/suite.hpp"

using namespace tautilt;

namespace {

const char* kNames[] = {"k", "dual_numbers", "a2", "a3", "a3_rad2"};

AlgebraPtr load(std::int64_t i) { return load_algebra(std::string(TAUTILT_FIXTURES) + "/" + kNames[i] + ".json"); }
EnumerationOptions opts(std::int64_t i) { return {i == 1 ? std::size_t{2} : std::size_t{3}, 1e7}; }

void BM_EnumerateIndecomposables(benchmark::State& state) {
    const auto a = load(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_indecomposables(a, opts(state.range(0))));
    state.SetLabel(kNames[state.range(0)]);
}

void BM_SupportTauTilting(benchmark::State& state) {
    const auto u = make_universe(load(state.range(0)), opts(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_support_tau_tilting(u));
    state.SetLabel(kNames[state.range(0)]);
}

void BM_TwoTermSilting(benchmark::State& state) {
    const auto u = make_universe(load(state.range(0)), opts(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_two_term_silting(u.algebra, u.indecs));
    state.SetLabel(kNames[state.range(0)]);
}

void BM_HomK(benchmark::State& state) {
    const auto u = make_universe(load(state.range(0)), opts(state.range(0)));
    const auto objs = two_term_indecomposables(u.algebra, u.indecs);
    for (auto _ : state)
        for (const auto& x : objs)
            for (const auto& y : objs) benchmark::DoNotOptimize(hom_k_dim(x.complex, y.complex, 1));
    state.SetLabel(kNames[state.range(0)]);
}

void BM_CompleteCotorsion(benchmark::State& state) {
    const auto u = make_universe(load(state.range(0)), opts(state.range(0)));
    const auto universe = two_term_universe(u.algebra, u.indecs);
    const auto silt = enumerate_two_term_silting(u.algebra, u.indecs);
    for (auto _ : state)
        for (const auto& s : silt) benchmark::DoNotOptimize(verify_complete_cotorsion(pair_of(s.complex, universe), universe));
    state.SetLabel(kNames[state.range(0)]);
}

void BM_EndAlgebra(benchmark::State& state) {
    const auto u = make_universe(load(state.range(0)), opts(state.range(0)));
    const auto silt = enumerate_two_term_silting(u.algebra, u.indecs);
    for (auto _ : state)
        for (const auto& s : silt) benchmark::DoNotOptimize(end_algebra(s.complex));
    state.SetLabel(kNames[state.range(0)]);
}

void BM_VerifyAll(benchmark::State& state) {
    const auto a = load(state.range(0));
    SuiteOptions opt;
    opt.enumeration = opts(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(a, opt));
    state.SetLabel(kNames[state.range(0)]);
}

}  // namespace

BENCHMARK(BM_EnumerateIndecomposables)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupportTauTilting)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoTermSilting)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomK)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompleteCotorsion)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EndAlgebra)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAll)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
