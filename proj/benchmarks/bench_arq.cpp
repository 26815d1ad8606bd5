#include <benchmark/benchmark.h>

#include "statmc/arq.hpp"

using namespace statmc::arq;

static void BM_SimulateAbstract(benchmark::State& state) {
    ArqConfig cfg;
    cfg.frame_len = 8;
    cfg.bit_error_p = 0.05;
    cfg.n_frames = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto res = simulate(cfg);
        benchmark::DoNotOptimize(res.throughput);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateAbstract)->Arg(500)->Arg(10000);

static void BM_SimulateBitExact(benchmark::State& state) {
    ArqConfig cfg;
    cfg.frame_len = 8;
    cfg.bit_error_p = 0.05;
    cfg.model = ErrorModel::bit_exact;
    cfg.n_frames = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto res = simulate(cfg);
        benchmark::DoNotOptimize(res.throughput);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateBitExact)->Arg(500)->Arg(10000);
