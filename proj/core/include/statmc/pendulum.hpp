#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "statmc/rng.hpp"
#include "statmc/stats.hpp"

namespace statmc {

/**
 * Rigid pendulum in a horizontal air stream:
 *
 *   phi'' = -(g/L) sin(phi) - b phi' + (F/(m L)) cos(phi)
 *
 * with drag force F = c u^2 of the free-stream speed u, held
 * piecewise-constant and resampled uniformly from
 * [u0 - du, u0 + du] (clamped at 0) every wind_refresh seconds.
 * With a constant force the equilibrium satisfies tan(phi_eq) = F/(m g).
 */
struct PendulumParams {
    double gravity = 9.81;       // m/s^2
    double length = 1.0;         // m
    double mass = 1.0;           // kg
    double damping = 0.5;        // 1/s
    double drag_coeff = 0.5;     // N s^2/m^2
    double wind_mean = 2.0;      // u0, m/s
    double wind_halfwidth = 1.0; // du, m/s
    double wind_refresh = 0.1;   // tau_w, s
    double dt = 1e-3;            // s
    double t_total = 100.0;      // s
    double burn_in = 20.0;       // s, discarded before statistics
    std::uint64_t seed = 1;

    void validate() const;
};

struct PendulumState {
    double phi = 0.0;    // rad
    double omega = 0.0;  // rad/s
    double t = 0.0;      // s
};

/// Piecewise-constant random wind: speed u resampled every refresh
/// interval, force c*u^2 in the fixed horizontal direction.
class WindProcess {
public:
    explicit WindProcess(const PendulumParams& params) : params_(params) {}

    /// Force for the step starting at time t (resamples on refresh
    /// boundaries; first call samples the initial speed).
    double force(double t, Rng& rng);

    double current_speed() const { return speed_; }

private:
    const PendulumParams& params_;
    double speed_ = 0.0;
    double next_refresh_ = 0.0;
    bool started_ = false;
};

/// One classical RK4 step with the force held constant.
/// Throws DivergenceError if the state leaves the finite range.
PendulumState step_rk4(const PendulumState& state, const PendulumParams& params,
                       double force);

/// Integrates from phi = omega = 0 over t_total, recording every step
/// (t_total = 0 yields just the initial state).
std::vector<PendulumState> simulate(const PendulumParams& params);

struct AngleDistribution {
    Histogram histogram;
    SummaryStats stats;
};

/// Distribution of phi over samples with t >= burn_in. The histogram
/// range defaults to mean +- 5 std (floor of 1e-6 on the halfwidth).
/// Throws std::invalid_argument when no samples survive the burn-in.
AngleDistribution angle_distribution(const std::vector<PendulumState>& trajectory,
                                     const PendulumParams& params,
                                     std::size_t bins = 50,
                                     std::optional<std::pair<double, double>> range =
                                         std::nullopt);

/// Total mechanical energy, used by the conservation checks:
/// E = 1/2 m L^2 omega^2 + m g L (1 - cos phi).
double pendulum_energy(const PendulumState& state, const PendulumParams& params);

}  // namespace statmc
