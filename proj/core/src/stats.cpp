#include "statmc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace statmc {

void RunningStats::push(double x) {
    n_ += 1;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
    if (other.n_ == 0) return;
    if (n_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double delta = other.mean_ - mean_;
    const double n = na + nb;
    mean_ += delta * nb / n;
    m2_ += other.m2_ + delta * delta * na * nb / n;
    n_ += other.n_;
}

double RunningStats::variance() const {
    if (n_ < 2) return 0.0;
    // Guard against tiny negative m2 from cancellation.
    return std::max(0.0, m2_ / static_cast<double>(n_ - 1));
}

SummaryStats RunningStats::summary() const {
    SummaryStats s;
    s.n = n_;
    s.mean = mean_;
    s.variance = variance();
    s.std_dev = std::sqrt(s.variance);
    s.std_err = n_ > 0 ? s.std_dev / std::sqrt(static_cast<double>(n_)) : 0.0;
    return s;
}

SummaryStats summarize(std::span<const double> samples) {
    if (samples.empty())
        throw std::invalid_argument("summarize: empty sample sequence");
    RunningStats acc;
    for (double x : samples) acc.push(x);
    return acc.summary();
}

Histogram::Histogram(double lo, double hi, std::size_t bins) : lo_(lo), hi_(hi) {
    if (!(lo < hi)) throw std::invalid_argument("Histogram: lo must be < hi");
    if (bins == 0) throw std::invalid_argument("Histogram: bins must be >= 1");
    width_ = (hi - lo) / static_cast<double>(bins);
    counts_.assign(bins, 0);
}

void Histogram::add(double x) {
    if (x < lo_) {
        underflow_ += 1;
        return;
    }
    if (x >= hi_) {
        overflow_ += 1;
        return;
    }
    auto idx = static_cast<std::size_t>((x - lo_) / width_);
    if (idx >= counts_.size()) idx = counts_.size() - 1;  // fp edge rounding
    counts_[idx] += 1;
}

std::uint64_t Histogram::total() const {
    std::uint64_t t = underflow_ + overflow_;
    for (auto c : counts_) t += c;
    return t;
}

Histogram make_histogram(std::span<const double> samples, double lo, double hi,
                         std::size_t bins) {
    Histogram h(lo, hi, bins);
    for (double x : samples) h.add(x);
    return h;
}

StabilityTracker::StabilityTracker(std::size_t window, double tolerance)
    : window_(window), tolerance_(tolerance) {
    if (window < 2) throw std::invalid_argument("StabilityTracker: window must be >= 2");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("StabilityTracker: tolerance must be > 0");
    ring_.assign(window, 0.0);
}

bool StabilityTracker::push(double estimate) {
    ring_[next_] = estimate;
    next_ = (next_ + 1) % window_;
    if (filled_ < window_) {
        filled_ += 1;
        if (filled_ < window_) return false;
    }
    const auto [lo, hi] = std::ranges::minmax_element(ring_);
    return (*hi - *lo) <= tolerance_ * std::max(1.0, std::abs(estimate));
}

}  // namespace statmc
