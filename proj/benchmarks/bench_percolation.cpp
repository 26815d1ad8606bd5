#include <benchmark/benchmark.h>

#include "statmc/percolation.hpp"
#include "statmc/rng.hpp"

static void BM_LabelClusters(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    statmc::Rng rng(1);
    const auto grid = statmc::generate_grid(side, 0.593, rng);
    for (auto _ : state) {
        auto labeling = statmc::label_clusters(grid);
        benchmark::DoNotOptimize(labeling.cluster_count);
    }
    state.SetComplexityN(static_cast<std::int64_t>(side * side));
}
BENCHMARK(BM_LabelClusters)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_SpanningEstimate(benchmark::State& state) {
    for (auto _ : state) {
        const auto point = statmc::estimate_spanning_probability(64, 0.593, 50, 1);
        benchmark::DoNotOptimize(point.spanning_probability);
    }
}
BENCHMARK(BM_SpanningEstimate);
