#include "statmc/arq.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "statmc/errors.hpp"
#include "statmc/parallel.hpp"

namespace statmc::arq {

void ArqConfig::validate() const {
    if (frame_len < 2)
        throw std::invalid_argument("arq: frame_len must be >= 2 (payload + parity)");
    if (!(bit_error_p >= 0.0 && bit_error_p <= 1.0))
        throw std::invalid_argument("arq: bit_error_p must be in [0, 1]");
    if (n_frames == 0) throw std::invalid_argument("arq: n_frames must be >= 1");
    if (max_attempts_per_frame == 0)
        throw std::invalid_argument("arq: max_attempts_per_frame must be >= 1");
    if (model == ErrorModel::abstract &&
        bit_error_p * static_cast<double>(frame_len) >= 1.0)
        throw std::invalid_argument(
            "arq: abstract model requires p*D < 1 (frame error would be certain)");
}

Frame encode_frame(const std::vector<std::uint8_t>& payload) {
    if (payload.empty())
        throw std::invalid_argument("encode_frame: payload must hold D-1 >= 1 bits");
    Frame frame;
    frame.payload = payload;
    std::uint8_t parity = 0;
    for (auto bit : payload) parity ^= (bit & 1u);
    frame.parity = parity;
    return frame;
}

bool parity_check(const std::vector<std::uint8_t>& frame_bits) {
    std::uint8_t x = 0;
    for (auto bit : frame_bits) x ^= (bit & 1u);
    return x == 0;
}

namespace {

/// One channel attempt under the abstract model: true on success.
bool attempt_abstract(Rng& rng, const ArqConfig& cfg) {
    const double threshold = cfg.bit_error_p * static_cast<double>(cfg.frame_len);
    const double u = cfg.quantize ? rng.next_uniform_quantized(cfg.quantize)
                                  : rng.next_uniform();
    return u >= threshold;
}

}  // namespace

ArqResult simulate(const ArqConfig& cfg) {
    cfg.validate();
    const unsigned d = cfg.frame_len;
    Rng rng(cfg.seed);
    ArqResult res;

    std::vector<std::uint8_t> frame_bits(d);
    for (std::uint64_t k = 0; k < cfg.n_frames; ++k) {
        bool fresh_payload = true;
        Frame frame;
        std::uint64_t attempts = 0;
        for (;;) {
            attempts += 1;
            res.total_tacts += d;
            bool delivered = false;
            bool corrupted = false;

            if (cfg.model == ErrorModel::abstract) {
                delivered = attempt_abstract(rng, cfg);
            } else {
                if (fresh_payload) {
                    std::vector<std::uint8_t> payload(d - 1);
                    for (auto& bit : payload) bit = rng.bernoulli(0.5) ? 1 : 0;
                    frame = encode_frame(payload);
                    fresh_payload = false;
                }
                frame_bits.assign(frame.payload.begin(), frame.payload.end());
                frame_bits.push_back(frame.parity);
                for (auto& bit : frame_bits) {
                    if (rng.bernoulli(cfg.bit_error_p)) {
                        bit ^= 1u;
                        corrupted = true;
                    }
                }
                delivered = parity_check(frame_bits);
            }

            if (delivered) {
                res.frames_delivered += 1;
                if (corrupted) res.undetected_error_frames += 1;
                break;
            }
            res.retransmissions += 1;
            if (attempts >= cfg.max_attempts_per_frame)
                throw RunawayError("arq: frame " + std::to_string(k) +
                                   " exceeded max attempts");
        }
    }

    res.throughput = static_cast<double>(cfg.n_frames) *
                     static_cast<double>(d - 1) /
                     static_cast<double>(res.total_tacts);
    return res;
}

double throughput_analytic(unsigned frame_len, double bit_error_p) {
    if (frame_len < 2) throw std::invalid_argument("throughput_analytic: D must be >= 2");
    const double q = bit_error_p * static_cast<double>(frame_len);
    if (q >= 1.0)
        throw std::domain_error("throughput_analytic: p*D >= 1 is outside the model");
    return static_cast<double>(frame_len - 1) * (1.0 - q) /
           static_cast<double>(frame_len);
}

double bsc_capacity(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("bsc_capacity: p must be in [0, 1]");
    auto plog2p = [](double x) { return x > 0.0 ? x * std::log2(x) : 0.0; };
    return 1.0 + plog2p(p) + plog2p(1.0 - p);
}

SweepResult sweep_frame_length(double p, unsigned d_min, unsigned d_max,
                               std::uint64_t n_frames, std::uint64_t seed,
                               unsigned threads) {
    if (d_min < 2) throw std::invalid_argument("sweep_frame_length: d_min must be >= 2");
    if (d_max < d_min)
        throw std::invalid_argument("sweep_frame_length: d_max must be >= d_min");

    SweepResult out;
    std::vector<unsigned> admissible;
    for (unsigned d = d_min; d <= d_max; ++d) {
        if (p * static_cast<double>(d) < 1.0)
            admissible.push_back(d);
        else
            out.skipped.push_back(d);
    }
    if (admissible.empty())
        throw std::invalid_argument(
            "sweep_frame_length: no admissible frame length (p*D >= 1 everywhere)");

    out.points.resize(admissible.size());
    parallel_for(admissible.size(), threads, [&](std::size_t i) {
        const unsigned d = admissible[i];
        ArqConfig cfg;
        cfg.frame_len = d;
        cfg.bit_error_p = p;
        cfg.n_frames = n_frames;
        cfg.seed = Rng::derive_seed(seed, i);
        out.points[i] = {d, simulate(cfg).throughput, throughput_analytic(d, p)};
    });
    return out;
}

CapacityEstimate empirical_capacity(double p, unsigned d_min, unsigned d_max,
                                    std::uint64_t n_frames, std::uint64_t seed,
                                    unsigned threads) {
    const SweepResult sweep = sweep_frame_length(p, d_min, d_max, n_frames, seed, threads);
    CapacityEstimate best;
    for (const auto& point : sweep.points) {
        if (best.d_opt == 0 || point.v_sim > best.capacity) {
            best.capacity = point.v_sim;
            best.d_opt = point.frame_len;
        }
    }
    return best;
}

std::vector<CapacityPoint> capacity_curve(const std::vector<double>& p_list,
                                          unsigned d_max, std::uint64_t n_frames,
                                          std::uint64_t seed, unsigned threads) {
    for (double p : p_list)
        if (!(p >= 0.0 && p < 0.5))
            throw std::invalid_argument("capacity_curve: p must be in [0, 0.5)");

    std::vector<CapacityPoint> curve;
    curve.reserve(p_list.size());
    for (std::size_t i = 0; i < p_list.size(); ++i) {
        const double p = p_list[i];
        const auto est =
            empirical_capacity(p, 2, d_max, n_frames, Rng::derive_seed(seed, i), threads);
        curve.push_back({p, est.capacity, bsc_capacity(p), est.d_opt});
    }
    return curve;
}

}  // namespace statmc::arq
