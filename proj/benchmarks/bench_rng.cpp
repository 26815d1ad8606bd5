#include <benchmark/benchmark.h>

#include "statmc/rng.hpp"

static void BM_NextUniform(benchmark::State& state) {
    statmc::Rng rng(1);
    double acc = 0.0;
    for (auto _ : state) acc += rng.next_uniform();
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_NextUniform);

static void BM_Bernoulli(benchmark::State& state) {
    statmc::Rng rng(1);
    std::uint64_t hits = 0;
    for (auto _ : state) hits += rng.bernoulli(0.4);
    benchmark::DoNotOptimize(hits);
}
BENCHMARK(BM_Bernoulli);

static void BM_ChooseWeighted(benchmark::State& state) {
    statmc::Rng rng(1);
    const std::vector<double> weights{0.3, 0.25, 0.45};
    std::size_t acc = 0;
    for (auto _ : state) acc += rng.choose_weighted(weights);
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_ChooseWeighted);

static void BM_StreamDerivation(benchmark::State& state) {
    std::uint64_t i = 0;
    for (auto _ : state) {
        statmc::Rng rng = statmc::Rng::from_stream(1, i++);
        benchmark::DoNotOptimize(rng.next_word());
    }
}
BENCHMARK(BM_StreamDerivation);

BENCHMARK_MAIN();
