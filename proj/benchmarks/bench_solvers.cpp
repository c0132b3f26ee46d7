#include <benchmark/benchmark.h>

#include "fiscap/citizen.hpp"
#include "fiscap/elite.hpp"
#include "fiscap/fiscal.hpp"
#include "fiscap/oracle.hpp"
#include "fiscap/sim.hpp"

namespace {

const auto kAligned = fiscap::validate(fiscap::ModelParams{1.0, 1.0, 0.1, 0.2},
                                       fiscap::Aligned{1.5});
const auto kTwoState = fiscap::validate(fiscap::ModelParams{1.0, 1.0, 0.5, 0.5},
                                        fiscap::TwoState{0.2, 0.6, 0.5});

void BM_OptimalReport(benchmark::State& state) {
    const fiscap::Policy policy{0.5, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(fiscap::optimal_report(kAligned, policy, 1.5).report);
}
BENCHMARK(BM_OptimalReport);

void BM_LafferCurve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fiscap::laffer_curve(kAligned, 1.0, 1.5, 0.0, 1.4, n));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_LafferCurve)->Arg(101)->Arg(1001)->Arg(10001);

void BM_OptimalAllocation(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(fiscap::optimal_allocation(kAligned, 1.5, 1.5).g_star);
}
BENCHMARK(BM_OptimalAllocation);

void BM_ClassifyEquilibrium(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(fiscap::classify_equilibrium(kTwoState, 0.2, 0.6, 0.5).tag);
}
BENCHMARK(BM_ClassifyEquilibrium);

void BM_BruteForceReport(benchmark::State& state) {
    const fiscap::Policy policy{0.5, 1.0};
    fiscap::GridSpec grid;
    grid.hi = 2.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(fiscap::brute_force_report(kAligned, policy, 1.5, grid));
}
BENCHMARK(BM_BruteForceReport);

void BM_RunTimeline(benchmark::State& state) {
    fiscap::Scenario scenario{kTwoState, 0.2, 0.6, 0.5, static_cast<int>(state.range(0)), 3,
                              fiscap::StateTag::low};
    for (auto _ : state)
        benchmark::DoNotOptimize(fiscap::run_timeline(scenario).records.size());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunTimeline)->Arg(16)->Arg(256);

void BM_AgreementSuite(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(fiscap::run_agreement_suite(42, static_cast<int>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AgreementSuite)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
