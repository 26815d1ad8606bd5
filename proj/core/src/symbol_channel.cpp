#include "statmc/symbol_channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "statmc/stats.hpp"

namespace statmc {

void SourceDist::validate() const {
    if (probs.empty()) throw std::invalid_argument("SourceDist: empty");
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw std::invalid_argument("SourceDist: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("SourceDist: probabilities sum to " +
                                    std::to_string(sum) + ", expected 1");
}

ChannelMatrix::ChannelMatrix(std::size_t rows, std::size_t cols,
                             std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("ChannelMatrix: empty dimensions");
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("ChannelMatrix: entry count does not match shape");
}

void ChannelMatrix::validate() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const double v = at(i, j);
            if (v < 0.0)
                throw std::invalid_argument("ChannelMatrix: negative entry in row " +
                                            std::to_string(i));
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("ChannelMatrix: row " + std::to_string(i) +
                                        " sums to " + std::to_string(sum));
    }
}

std::pair<std::size_t, std::size_t> transmit_once(const SourceDist& source,
                                                  const ChannelMatrix& matrix,
                                                  Rng& rng) {
    const std::size_t input = rng.choose_weighted(source.probs);
    const std::size_t output = rng.choose_weighted(matrix.row(input));
    return {input, output};
}

TransmissionStats estimate_error_rate(const SourceDist& source,
                                      const ChannelMatrix& matrix,
                                      std::uint64_t trials, std::uint64_t seed,
                                      std::size_t stability_window,
                                      double stability_tolerance,
                                      std::uint64_t running_stride) {
    source.validate();
    matrix.validate();
    if (source.size() != matrix.rows())
        throw std::invalid_argument("estimate_error_rate: source/matrix size mismatch");
    if (trials == 0)
        throw std::invalid_argument("estimate_error_rate: trials must be >= 1");
    if (running_stride == 0) running_stride = 1;

    Rng rng(seed);
    StabilityTracker tracker(stability_window, stability_tolerance);

    TransmissionStats stats;
    stats.confusion.assign(matrix.rows() * matrix.cols(), 0);
    for (std::uint64_t n = 1; n <= trials; ++n) {
        const auto [input, output] = transmit_once(source, matrix, rng);
        stats.confusion[input * matrix.cols() + output] += 1;
        if (output != input) stats.n_errors += 1;
        if (output >= matrix.rows()) stats.n_erasures += 1;

        const double rate =
            static_cast<double>(stats.n_errors) / static_cast<double>(n);
        if (tracker.push(rate) && stats.first_stable_n == 0) stats.first_stable_n = n;
        if (n % running_stride == 0 || n == trials)
            stats.running.emplace_back(n, rate);
    }
    stats.n_sent = trials;
    stats.error_rate =
        static_cast<double>(stats.n_errors) / static_cast<double>(trials);
    return stats;
}

double analytic_error_rate(const SourceDist& source, const ChannelMatrix& matrix) {
    source.validate();
    matrix.validate();
    if (matrix.cols() < matrix.rows())
        throw std::invalid_argument("analytic_error_rate: needs cols >= rows");
    if (source.size() != matrix.rows())
        throw std::invalid_argument("analytic_error_rate: source/matrix size mismatch");
    double rate = 0.0;
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        rate += source.probs[i] * (1.0 - matrix.at(i, i));
    return rate;
}

double analytic_erasure_rate(const SourceDist& source, const ChannelMatrix& matrix) {
    source.validate();
    matrix.validate();
    if (source.size() != matrix.rows())
        throw std::invalid_argument("analytic_erasure_rate: source/matrix size mismatch");
    double rate = 0.0;
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = matrix.rows(); j < matrix.cols(); ++j)
            rate += source.probs[i] * matrix.at(i, j);
    return rate;
}

SourceDist default_source() { return SourceDist{{0.3, 0.25, 0.45}}; }

ChannelMatrix default_channel_matrix() {
    return ChannelMatrix(3, 4,
                         {0.7, 0.1, 0.1, 0.1,   //
                          0.1, 0.8, 0.1, 0.0,   //
                          0.2, 0.2, 0.5, 0.1});
}

}  // namespace statmc
