#pragma once

#include <cstdint>
#include <vector>

#include "statmc/rng.hpp"

namespace statmc::arq {

enum class ErrorModel {
    /// One uniform draw per attempt; the frame fails iff u < p*D.
    /// Linearized frame-error probability; requires p*D < 1.
    abstract,
    /// Each of the D bits is flipped independently with probability p;
    /// failure is a parity-check miss. Even-weight flip patterns pass
    /// undetected and are counted.
    bit_exact,
};

struct ArqConfig {
    unsigned frame_len = 8;           // D >= 2: D-1 payload bits + 1 parity bit
    double bit_error_p = 0.0;         // per-bit error probability
    std::uint64_t n_frames = 500;     // N_K distinct frames to deliver
    ErrorModel model = ErrorModel::abstract;
    std::uint32_t quantize = 0;       // 0 = full precision; q emulates random(q)/q draws
    std::uint64_t max_attempts_per_frame = 1'000'000;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument on a bad field combination
    /// (including abstract model with p*D >= 1, a certain deadlock).
    void validate() const;
};

struct ArqResult {
    std::uint64_t total_tacts = 0;      // t = D * (delivered + retransmissions)
    std::uint64_t frames_delivered = 0;
    std::uint64_t retransmissions = 0;
    double throughput = 0.0;            // v = N_K * (D-1) / t, information bits per tact
    std::uint64_t undetected_error_frames = 0;  // bit_exact only
};

struct Frame {
    std::vector<std::uint8_t> payload;  // D-1 bits
    std::uint8_t parity = 0;            // even parity over the payload
};

struct SweepPoint {
    unsigned frame_len = 0;
    double v_sim = 0.0;
    double v_analytic = 0.0;
};

struct SweepResult {
    std::vector<SweepPoint> points;     // admissible D, ascending
    std::vector<unsigned> skipped;      // D with p*D >= 1
};

struct CapacityEstimate {
    double capacity = 0.0;   // max v_sim over admissible D
    unsigned d_opt = 0;      // smallest argmax
};

struct CapacityPoint {
    double p = 0.0;
    double c_empirical = 0.0;
    double c_bsc = 0.0;
    unsigned d_opt = 0;
};

/// Even-parity framing. Throws std::invalid_argument on an empty payload.
Frame encode_frame(const std::vector<std::uint8_t>& payload);

/// True iff the XOR over all D bits is zero.
bool parity_check(const std::vector<std::uint8_t>& frame_bits);

/// Stop-and-wait transmission of n_frames frames; every attempt costs D
/// tacts and a failed frame is retransmitted until it passes.
/// Throws RunawayError when a frame exceeds max_attempts_per_frame.
ArqResult simulate(const ArqConfig& config);

/// Closed-form throughput of the abstract model, (D-1)(1 - pD)/D.
/// Throws std::domain_error when p*D >= 1.
double throughput_analytic(unsigned frame_len, double bit_error_p);

/// Binary symmetric channel capacity, 1 + p log2 p + (1-p) log2(1-p),
/// in information bits per tact. Throws std::invalid_argument outside [0, 1].
double bsc_capacity(double p);

/// One simulation per admissible D in [d_min, d_max] with per-D substreams.
/// Throws std::invalid_argument when no D is admissible.
SweepResult sweep_frame_length(double p, unsigned d_min, unsigned d_max,
                               std::uint64_t n_frames, std::uint64_t seed,
                               unsigned threads = 1);

/// Maximum simulated throughput over frame lengths; ties break toward
/// the smallest D.
CapacityEstimate empirical_capacity(double p, unsigned d_min, unsigned d_max,
                                    std::uint64_t n_frames, std::uint64_t seed,
                                    unsigned threads = 1);

/// Empirical vs analytic capacity per p. Throws std::invalid_argument
/// for entries outside [0, 0.5).
std::vector<CapacityPoint> capacity_curve(const std::vector<double>& p_list,
                                          unsigned d_max, std::uint64_t n_frames,
                                          std::uint64_t seed, unsigned threads = 1);

}  // namespace statmc::arq
