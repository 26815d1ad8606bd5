#include <benchmark/benchmark.h>

#include "statmc/scattering.hpp"

static void BM_Trajectory(benchmark::State& state) {
    statmc::ScatteringConfig cfg;
    cfg.centers = {{{0.0, 1.0}, 1.0}, {{0.0, -1.0}, 1.0}};
    for (auto _ : state) {
        auto outcome = statmc::integrate_trajectory(1.7, cfg);
        benchmark::DoNotOptimize(outcome.alpha);
    }
}
BENCHMARK(BM_Trajectory);
