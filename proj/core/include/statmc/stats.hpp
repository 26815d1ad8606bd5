#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace statmc {

/// Sample count, mean and unbiased (n-1) variance. For n == 1 the
/// variance and stderr are reported as 0.
struct SummaryStats {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
    double std_dev = 0.0;
    double std_err = 0.0;
};

/// Single-pass Welford accumulator; merge() combines two accumulators
/// with the pairwise update so parallel reductions stay well-conditioned.
class RunningStats {
public:
    void push(double x);
    void merge(const RunningStats& other);

    std::size_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const;  // unbiased, 0 for n < 2

    SummaryStats summary() const;

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Throws std::invalid_argument on empty input.
SummaryStats summarize(std::span<const double> samples);

/// Binned counts over [lo, hi) with explicit underflow/overflow buckets,
/// so the total number of observations is always conserved.
class Histogram {
public:
    /// Throws std::invalid_argument unless lo < hi and bins >= 1.
    Histogram(double lo, double hi, std::size_t bins);

    void add(double x);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    std::size_t bins() const { return counts_.size(); }
    double bin_width() const { return width_; }
    double bin_lo(std::size_t i) const { return lo_ + static_cast<double>(i) * width_; }
    double bin_hi(std::size_t i) const { return lo_ + static_cast<double>(i + 1) * width_; }

    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t underflow() const { return underflow_; }
    std::uint64_t overflow() const { return overflow_; }
    std::uint64_t total() const;

private:
    double lo_;
    double hi_;
    double width_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t underflow_ = 0;
    std::uint64_t overflow_ = 0;
};

Histogram make_histogram(std::span<const double> samples, double lo, double hi,
                         std::size_t bins);

/**
 * Detects when a running estimate has settled: stable means the spread
 * (max - min) of the last `window` pushed values is at most
 * tolerance * max(1, |latest|).
 */
class StabilityTracker {
public:
    /// Throws std::invalid_argument unless window >= 2 and tolerance > 0.
    StabilityTracker(std::size_t window, double tolerance);

    /// Push the next running estimate; returns true once the window is
    /// full and the relative-spread criterion holds.
    bool push(double estimate);

    std::size_t window() const { return window_; }
    double tolerance() const { return tolerance_; }

private:
    std::size_t window_;
    double tolerance_;
    std::vector<double> ring_;
    std::size_t next_ = 0;
    std::size_t filled_ = 0;
};

}  // namespace statmc
