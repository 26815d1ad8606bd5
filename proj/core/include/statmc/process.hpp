#pragma once

#include <cstdint>
#include <vector>

#include "statmc/rng.hpp"
#include "statmc/stats.hpp"

namespace statmc {

/// A chain of operations; each one repeats until it succeeds, so the
/// attempt count per operation is geometric with parameter p_i.
struct ProcessSpec {
    std::vector<double> durations;      // tau_i > 0
    std::vector<double> success_probs;  // 0 < p_i <= 1

    /// Throws std::invalid_argument on empty/mismatched lists,
    /// nonpositive durations, or probabilities outside (0, 1].
    void validate() const;
};

struct ProcessMoments {
    double mean = 0.0;      // sum tau_i / p_i
    double variance = 0.0;  // sum tau_i^2 (1 - p_i) / p_i^2
};

struct ProcessEstimate {
    SummaryStats stats;          // over per-trial totals
    std::vector<double> totals;  // slot = trial index
};

inline constexpr std::uint64_t kProcessAttemptCap = 10'000'000;

/// Total duration of one run. Throws RunawayError if any operation
/// exceeds the attempt cap.
double run_once(const ProcessSpec& spec, Rng& rng);

/// Closed-form moments of the total duration (independent geometric
/// attempt counts); the reference the Monte Carlo estimate is checked
/// against.
ProcessMoments analytic_moments(const ProcessSpec& spec);

/// trials independent runs on per-trial substreams.
ProcessEstimate estimate(const ProcessSpec& spec, std::uint64_t trials,
                         std::uint64_t seed, unsigned threads = 1);

/// The built-in five-operation default spec.
ProcessSpec default_process_spec();

}  // namespace statmc
