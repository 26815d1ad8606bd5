#include "statmc/random_walk.hpp"

#include <stdexcept>

#include "statmc/parallel.hpp"
#include "statmc/stats.hpp"

namespace statmc {

std::int64_t walk_once(Rng& rng, std::uint64_t steps) {
    std::int64_t z = 0;
    for (std::uint64_t i = 0; i < steps; ++i) z += rng.bernoulli(0.5) ? 1 : -1;
    return z;
}

WalkEnsembleResult ensemble(const WalkConfig& config, std::uint64_t stream_offset,
                            unsigned threads) {
    if (config.trials == 0) throw std::invalid_argument("ensemble: trials must be >= 1");

    WalkEnsembleResult result;
    result.final_positions.assign(config.trials, 0);
    parallel_for(config.trials, threads, [&](std::size_t trial) {
        Rng rng = Rng::from_stream(config.seed, stream_offset + trial);
        result.final_positions[trial] = walk_once(rng, config.steps);
    });

    RunningStats sq;
    for (std::int64_t z : result.final_positions) {
        const double zd = static_cast<double>(z);
        sq.push(zd * zd);
    }
    const SummaryStats s = sq.summary();
    result.msd = s.mean;
    result.msd_stderr = s.std_err;
    return result;
}

std::vector<MsdPoint> msd_curve(const std::vector<std::uint64_t>& steps_list,
                                std::uint64_t trials, std::uint64_t seed,
                                unsigned threads) {
    if (steps_list.empty()) throw std::invalid_argument("msd_curve: empty N list");
    for (auto n : steps_list)
        if (n == 0) throw std::invalid_argument("msd_curve: N must be >= 1");

    std::vector<MsdPoint> curve;
    curve.reserve(steps_list.size());
    for (std::size_t i = 0; i < steps_list.size(); ++i) {
        WalkConfig cfg{steps_list[i], trials, seed};
        const auto res = ensemble(cfg, static_cast<std::uint64_t>(i) * trials, threads);
        curve.push_back({steps_list[i], res.msd, res.msd_stderr});
    }
    return curve;
}

}  // namespace statmc
