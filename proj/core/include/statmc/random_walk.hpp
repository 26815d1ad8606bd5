#pragma once

#include <cstdint>
#include <vector>

#include "statmc/rng.hpp"

namespace statmc {

struct WalkConfig {
    std::uint64_t steps = 100;    // N
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
};

struct WalkEnsembleResult {
    std::vector<std::int64_t> final_positions;  // z_N per trial, slot = trial index
    double msd = 0.0;                           // mean of z_N^2
    double msd_stderr = 0.0;                    // sample std of z_N^2 / sqrt(trials)
};

struct MsdPoint {
    std::uint64_t steps = 0;
    double msd = 0.0;
    double msd_stderr = 0.0;
};

/// Sum of N equiprobable +-1 steps.
std::int64_t walk_once(Rng& rng, std::uint64_t steps);

/// Independent walks on per-trial substreams; stream_offset shifts the
/// substream indices so several ensembles under one seed stay disjoint.
WalkEnsembleResult ensemble(const WalkConfig& config, std::uint64_t stream_offset = 0,
                            unsigned threads = 1);

/// One ensemble per N with disjoint substream blocks, ordered as input.
/// Throws std::invalid_argument for an empty list or N = 0 entries.
std::vector<MsdPoint> msd_curve(const std::vector<std::uint64_t>& steps_list,
                                std::uint64_t trials, std::uint64_t seed,
                                unsigned threads = 1);

}  // namespace statmc
