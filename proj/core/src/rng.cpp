#include "statmc/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace statmc {

namespace {

constexpr std::uint64_t kLcgMul = 6364136223846793005ULL;
constexpr std::uint64_t kLcgAdd = 1442695040888963407ULL;
constexpr std::uint64_t kStreamMix = 0x9E3779B97F4A7C15ULL;

inline std::uint32_t lcg_word(std::uint64_t& s) {
    s = s * kLcgMul + kLcgAdd;
    return static_cast<std::uint32_t>(s >> 32);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
    // Expand the seed into the ring; an all-zero ring would be a fixed
    // point of the additive recurrence, so reseed until it is not.
    std::uint64_t s = seed;
    for (;;) {
        std::uint64_t acc = s;
        for (auto& w : ring_) w = lcg_word(acc);
        if (std::ranges::any_of(ring_, [](std::uint32_t w) { return w != 0; })) break;
        s += 1;
    }
    // ring_[0..54] holds x_1..x_55; the next output is
    // x_56 = x_32 + x_1, so the lag positions start at 31 and 0.
    pos_short_ = kLagLong - kLagShort;
    pos_long_ = 0;
    for (std::size_t i = 0; i < kWarmup; ++i) next_word();
}

std::uint64_t Rng::derive_seed(std::uint64_t root_seed, std::uint64_t stream_index) {
    std::uint64_t s = root_seed ^ (stream_index * kStreamMix);
    s = s * kLcgMul + kLcgAdd;
    s = s * kLcgMul + kLcgAdd;
    return s;
}

Rng Rng::from_stream(StreamId id) {
    return Rng(derive_seed(id.root_seed, id.stream_index));
}

std::uint32_t Rng::next_word() {
    const std::uint32_t v = ring_[pos_short_] + ring_[pos_long_];
    ring_[pos_long_] = v;
    if (++pos_short_ == kLagLong) pos_short_ = 0;
    if (++pos_long_ == kLagLong) pos_long_ = 0;
    return v;
}

double Rng::next_uniform() {
    return next_word() * 0x1p-32;
}

double Rng::next_uniform_quantized(std::uint32_t q) {
    if (q == 0) throw std::invalid_argument("next_uniform_quantized: q must be >= 1");
    const std::uint64_t k = (static_cast<std::uint64_t>(next_word()) * q) >> 32;
    return static_cast<double>(k) / static_cast<double>(q);
}

bool Rng::bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("bernoulli: p must be in [0, 1]");
    return next_uniform() < p;
}

std::size_t Rng::choose_weighted(std::span<const double> weights) {
    if (weights.empty())
        throw std::invalid_argument("choose_weighted: empty weight list");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("choose_weighted: negative weight");
        total += w;
    }
    if (total <= 0.0)
        throw std::invalid_argument("choose_weighted: all weights are zero");

    const double u = next_uniform() * total;
    double cum = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > 0.0) last_positive = i;
        cum += weights[i];
        if (u < cum) return i;
    }
    // Rounding put u at or past the last edge; return the last index
    // that actually carries mass.
    return last_positive;
}

}  // namespace statmc
