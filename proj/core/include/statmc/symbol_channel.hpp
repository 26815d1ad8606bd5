#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "statmc/rng.hpp"

namespace statmc {

/// Input-symbol usage probabilities. validate() checks nonnegativity and
/// that the probabilities sum to 1 within 1e-9.
struct SourceDist {
    std::vector<double> probs;

    void validate() const;
    std::size_t size() const { return probs.size(); }
};

/// Row-stochastic transition matrix: entry (i, j) is the probability of
/// output symbol j given input symbol i. Output columns beyond the input
/// alphabet (j >= rows) are erasure symbols.
class ChannelMatrix {
public:
    ChannelMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    /// Throws std::invalid_argument naming the first bad row if any row
    /// sum is off by more than 1e-9 or an entry is negative.
    void validate() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    std::span<const double> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

struct TransmissionStats {
    std::uint64_t n_sent = 0;
    std::uint64_t n_errors = 0;          // output != input (erasures included)
    std::uint64_t n_erasures = 0;        // output outside the input alphabet
    double error_rate = 0.0;
    std::vector<std::uint64_t> confusion;  // rows x cols, row-major
    std::uint64_t first_stable_n = 0;      // 0 = stability never reached
    /// Running estimate sampled every `running_stride` trials: (n, rate).
    std::vector<std::pair<std::uint64_t, double>> running;
};

/// One (input, output) symbol pair drawn by lot.
std::pair<std::size_t, std::size_t> transmit_once(const SourceDist& source,
                                                  const ChannelMatrix& matrix,
                                                  Rng& rng);

/// Sequential trials on one stream: accumulates the confusion matrix,
/// counts mismatches and erasures, and feeds the running error rate to a
/// StabilityTracker(window, tolerance), recording the first stable n.
TransmissionStats estimate_error_rate(const SourceDist& source,
                                      const ChannelMatrix& matrix,
                                      std::uint64_t trials, std::uint64_t seed,
                                      std::size_t stability_window = 200,
                                      double stability_tolerance = 0.02,
                                      std::uint64_t running_stride = 100);

/// Exact mismatch probability, sum_i p_i * (1 - P_ii).
/// Requires cols >= rows so the diagonal exists.
double analytic_error_rate(const SourceDist& source, const ChannelMatrix& matrix);

/// Exact erasure probability, sum_i p_i * sum_{j >= rows} P_ij.
double analytic_erasure_rate(const SourceDist& source, const ChannelMatrix& matrix);

/// The built-in 3-symbol source and 3x4 channel matrix defaults.
SourceDist default_source();
ChannelMatrix default_channel_matrix();

}  // namespace statmc
