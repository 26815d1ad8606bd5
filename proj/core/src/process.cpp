#include "statmc/process.hpp"

#include <stdexcept>
#include <string>

#include "statmc/errors.hpp"
#include "statmc/parallel.hpp"

namespace statmc {

void ProcessSpec::validate() const {
    if (durations.empty())
        throw std::invalid_argument("ProcessSpec: no operations");
    if (durations.size() != success_probs.size())
        throw std::invalid_argument("ProcessSpec: durations/success_probs length mismatch");
    for (double tau : durations)
        if (!(tau > 0.0))
            throw std::invalid_argument("ProcessSpec: durations must be positive");
    for (double p : success_probs)
        if (!(p > 0.0 && p <= 1.0))
            throw std::invalid_argument("ProcessSpec: success probabilities must be in (0, 1]");
}

double run_once(const ProcessSpec& spec, Rng& rng) {
    double total = 0.0;
    for (std::size_t i = 0; i < spec.durations.size(); ++i) {
        std::uint64_t attempts = 0;
        for (;;) {
            total += spec.durations[i];
            attempts += 1;
            if (rng.bernoulli(spec.success_probs[i])) break;
            if (attempts >= kProcessAttemptCap)
                throw RunawayError("process: operation " + std::to_string(i) +
                                   " exceeded the attempt cap");
        }
    }
    return total;
}

ProcessMoments analytic_moments(const ProcessSpec& spec) {
    spec.validate();
    ProcessMoments m;
    for (std::size_t i = 0; i < spec.durations.size(); ++i) {
        const double tau = spec.durations[i];
        const double p = spec.success_probs[i];
        m.mean += tau / p;
        m.variance += tau * tau * (1.0 - p) / (p * p);
    }
    return m;
}

ProcessEstimate estimate(const ProcessSpec& spec, std::uint64_t trials,
                         std::uint64_t seed, unsigned threads) {
    spec.validate();
    if (trials < 2) throw std::invalid_argument("estimate: trials must be >= 2");

    ProcessEstimate out;
    out.totals.assign(trials, 0.0);
    parallel_for(trials, threads, [&](std::size_t trial) {
        Rng rng = Rng::from_stream(seed, trial);
        out.totals[trial] = run_once(spec, rng);
    });
    out.stats = summarize(out.totals);
    return out;
}

ProcessSpec default_process_spec() {
    return ProcessSpec{{1.6, 2.7, 1.4, 3.8, 2.6}, {0.6, 0.7, 0.4, 0.8, 0.6}};
}

}  // namespace statmc
