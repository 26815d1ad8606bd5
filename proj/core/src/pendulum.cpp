#include "statmc/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "statmc/errors.hpp"

namespace statmc {

void PendulumParams::validate() const {
    if (!(length > 0.0)) throw std::invalid_argument("pendulum: length must be > 0");
    if (!(mass > 0.0)) throw std::invalid_argument("pendulum: mass must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("pendulum: dt must be > 0");
    if (!(wind_refresh >= dt))
        throw std::invalid_argument("pendulum: wind_refresh must be >= dt");
    if (damping < 0.0) throw std::invalid_argument("pendulum: damping must be >= 0");
    if (wind_halfwidth < 0.0)
        throw std::invalid_argument("pendulum: wind_halfwidth must be >= 0");
    if (t_total < 0.0) throw std::invalid_argument("pendulum: t_total must be >= 0");
    if (!(burn_in >= 0.0 && (t_total == 0.0 || burn_in < t_total)))
        throw std::invalid_argument("pendulum: need 0 <= burn_in < t_total");
}

double WindProcess::force(double t, Rng& rng) {
    if (!started_ || t >= next_refresh_) {
        const double lo = params_.wind_mean - params_.wind_halfwidth;
        const double hi = params_.wind_mean + params_.wind_halfwidth;
        speed_ = std::max(0.0, lo + (hi - lo) * rng.next_uniform());
        started_ = true;
        // Refresh boundaries stay on the fixed grid k * tau_w.
        next_refresh_ = (std::floor(t / params_.wind_refresh) + 1.0) * params_.wind_refresh;
    }
    return params_.drag_coeff * speed_ * speed_;
}

namespace {

struct Derivative {
    double dphi;
    double domega;
};

inline Derivative rhs(double phi, double omega, const PendulumParams& p, double force) {
    return {omega, -(p.gravity / p.length) * std::sin(phi) - p.damping * omega +
                       force / (p.mass * p.length) * std::cos(phi)};
}

}  // namespace

PendulumState step_rk4(const PendulumState& s, const PendulumParams& p, double force) {
    const double h = p.dt;
    const Derivative k1 = rhs(s.phi, s.omega, p, force);
    const Derivative k2 = rhs(s.phi + 0.5 * h * k1.dphi, s.omega + 0.5 * h * k1.domega, p, force);
    const Derivative k3 = rhs(s.phi + 0.5 * h * k2.dphi, s.omega + 0.5 * h * k2.domega, p, force);
    const Derivative k4 = rhs(s.phi + h * k3.dphi, s.omega + h * k3.domega, p, force);

    PendulumState out;
    out.phi = s.phi + h / 6.0 * (k1.dphi + 2.0 * k2.dphi + 2.0 * k3.dphi + k4.dphi);
    out.omega = s.omega + h / 6.0 * (k1.domega + 2.0 * k2.domega + 2.0 * k3.domega + k4.domega);
    out.t = s.t + h;
    if (!std::isfinite(out.phi) || !std::isfinite(out.omega))
        throw DivergenceError("pendulum: non-finite state at t = " + std::to_string(out.t),
                              out.t);
    return out;
}

std::vector<PendulumState> simulate(const PendulumParams& params) {
    params.validate();
    const auto steps = static_cast<std::uint64_t>(std::llround(params.t_total / params.dt));

    Rng rng(params.seed);
    WindProcess wind(params);

    std::vector<PendulumState> trajectory;
    trajectory.reserve(steps + 1);
    PendulumState state;
    trajectory.push_back(state);
    for (std::uint64_t i = 0; i < steps; ++i) {
        const double force = wind.force(state.t, rng);
        state = step_rk4(state, params, force);
        state.t = static_cast<double>(i + 1) * params.dt;  // avoid additive drift
        trajectory.push_back(state);
    }
    return trajectory;
}

AngleDistribution angle_distribution(const std::vector<PendulumState>& trajectory,
                                     const PendulumParams& params, std::size_t bins,
                                     std::optional<std::pair<double, double>> range) {
    std::vector<double> angles;
    angles.reserve(trajectory.size());
    for (const auto& s : trajectory)
        if (s.t >= params.burn_in) angles.push_back(s.phi);
    if (angles.empty())
        throw std::invalid_argument("angle_distribution: no samples after burn-in");

    const SummaryStats stats = summarize(angles);
    double lo, hi;
    if (range) {
        lo = range->first;
        hi = range->second;
    } else {
        const double halfwidth = std::max(5.0 * stats.std_dev, 1e-6);
        lo = stats.mean - halfwidth;
        hi = stats.mean + halfwidth;
    }
    Histogram hist = make_histogram(angles, lo, hi, bins);
    return {std::move(hist), stats};
}

double pendulum_energy(const PendulumState& s, const PendulumParams& p) {
    return 0.5 * p.mass * p.length * p.length * s.omega * s.omega +
           p.mass * p.gravity * p.length * (1.0 - std::cos(s.phi));
}

}  // namespace statmc
