#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace statmc {

/// Identifies one independent substream of a root seed. Every parallel
/// trial derives its own generator from (root_seed, stream_index) so that
/// results do not depend on scheduling.
struct StreamId {
    std::uint64_t root_seed = 0;
    std::uint64_t stream_index = 0;
};

/**
 * Additive lagged-Fibonacci generator, lags (24, 55), modulus 2^32:
 *
 *   x_n = (x_{n-24} + x_{n-55}) mod 2^32
 *
 * The ring is filled from a 64-bit LCG expansion of the seed (top 32 bits
 * of each step) and the first 550 outputs are discarded. Identical seeds
 * give identical streams on every platform; there is no global state.
 *
 * Not thread-safe: one instance per thread, see StreamId.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Deterministic substream mixing: same id, same stream.
    static Rng from_stream(StreamId id);
    static Rng from_stream(std::uint64_t root_seed, std::uint64_t stream_index) {
        return from_stream(StreamId{root_seed, stream_index});
    }

    /// Seed mixing used by from_stream, exposed so callers can pre-derive
    /// per-block root seeds. Injective in stream_index for a fixed root.
    static std::uint64_t derive_seed(std::uint64_t root_seed, std::uint64_t stream_index);

    std::uint64_t seed() const { return seed_; }

    /// Raw generator word.
    std::uint32_t next_word();

    /// Uniform in [0, 1), granularity 2^-32.
    double next_uniform();

    /// k/q with k uniform on {0, ..., q-1}. Emulates coarse generators
    /// of the random(q)/q kind. Throws std::invalid_argument for q = 0.
    double next_uniform_quantized(std::uint32_t q);

    /// True with probability p. Throws std::invalid_argument unless 0 <= p <= 1.
    bool bernoulli(double p);

    /// Index i with probability weights[i] / sum(weights), by cumulative
    /// inversion of a single uniform draw ("choice by lot").
    /// Throws std::invalid_argument if weights is empty, any weight is
    /// negative, or all weights are zero.
    std::size_t choose_weighted(std::span<const double> weights);

private:
    static constexpr std::size_t kLagShort = 24;
    static constexpr std::size_t kLagLong = 55;
    static constexpr std::size_t kWarmup = 550;

    std::array<std::uint32_t, kLagLong> ring_{};
    std::size_t pos_short_ = 0;  // position of x_{n-24}
    std::size_t pos_long_ = 0;   // position of x_{n-55}
    std::uint64_t seed_ = 0;
};

}  // namespace statmc
