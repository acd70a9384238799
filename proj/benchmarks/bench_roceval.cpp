#include <benchmark/benchmark.h>

#include <random>

#include "roceval/confidence.hpp"
#include "roceval/metric_table.hpp"
#include "roceval/roc.hpp"
#include "roceval/scenario.hpp"

using namespace roceval;

namespace {

LabeledDataset make_random(int n, std::uint64_t seed) {
    std::mt19937_64 rng = trial_engine(seed, 0);
    return random_trial(n, rng);
}

void BM_RocCurve(benchmark::State& state) {
    const LabeledDataset dataset = make_random(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(roc_curve(dataset));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RocCurve)->Range(64, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_AucTrapezoid(benchmark::State& state) {
    const RocCurve curve = roc_curve(make_random(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(auc_trapezoid(curve));
    }
}
BENCHMARK(BM_AucTrapezoid)->Range(64, 1 << 16);

void BM_PairwiseOracle(benchmark::State& state) {
    const LabeledDataset dataset = make_random(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(auc_pairwise_oracle(dataset));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairwiseOracle)->Range(64, 1 << 12)->Complexity(benchmark::oNSquared);

void BM_Cauc(benchmark::State& state) {
    const LabeledDataset dataset = make_random(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cauc(dataset));
    }
}
BENCHMARK(BM_Cauc)->Range(64, 1 << 14);

void BM_BuildTable(benchmark::State& state) {
    const LabeledDataset dataset = make_random(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_table(dataset));
    }
}
BENCHMARK(BM_BuildTable)->Range(64, 1 << 11);

void BM_MonteCarlo(benchmark::State& state) {
    const RandomTrialConfig config{100, static_cast<int>(state.range(0)), 6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(monte_carlo(config, 1));
    }
}
BENCHMARK(BM_MonteCarlo)->Range(8, 512);

}  // namespace

BENCHMARK_MAIN();
