#pragma once

#include <cstdint>
#include <vector>

#include "statmc/rng.hpp"
#include "statmc/stats.hpp"

namespace statmc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Fixed repulsive inverse-square center; strength is the product k*q*Q
/// (energy * length).
struct ChargeCenter {
    Vec2 position;
    double strength = 1.0;
};

struct ScatteringConfig {
    std::vector<ChargeCenter> centers;
    double mass = 1.0;
    double speed = 1.0;          // v0, launch speed along +x
    double start_x = -20.0;      // launch abscissa (far left of the centers)
    double stop_x = 20.0;        // escape abscissa
    double b_min = -5.0;         // impact-parameter interval
    double b_max = 5.0;
    double dt = 1e-2;
    std::uint64_t max_steps = 2'000'000;
    std::uint64_t particles = 1000;
    std::uint64_t seed = 1;
    double energy_tolerance = 1e-4;  // relative drift above this flags the outcome

    void validate() const;
};

enum class TrajectoryStatus {
    escaped,
    max_steps_exceeded,
    singular,
};

struct TrajectoryOutcome {
    double b = 0.0;             // impact parameter
    double alpha = 0.0;         // deflection angle at exit, (-pi, pi]
    std::uint64_t steps_used = 0;
    double energy_drift = 0.0;  // relative
    bool energy_ok = true;
    TrajectoryStatus status = TrajectoryStatus::escaped;
    Vec2 last_position;
    Vec2 last_velocity;
};

struct SweepResult {
    Histogram alpha_histogram;
    std::vector<TrajectoryOutcome> outcomes;  // slot = particle index
};

/// Superposition of repulsive inverse-square forces.
/// Throws SingularityError within 1e-9 of a center.
Vec2 force_at(const Vec2& point, const std::vector<ChargeCenter>& centers);

/// RK4 on (position, velocity) from (start_x, b) with velocity (v0, 0)
/// until the particle escapes (x > stop_x or |position| > 10 |start_x|).
/// Throws NonEscapeError when max_steps runs out, SingularityError on a
/// close encounter; b outside [b_min, b_max] is std::invalid_argument.
TrajectoryOutcome integrate_trajectory(double b, const ScatteringConfig& config);

/// Random impact parameters on per-particle substreams; trajectory
/// failures are recorded in the outcome, not thrown. The histogram
/// covers escaped particles over [-pi, pi].
SweepResult sweep(const ScatteringConfig& config, std::size_t bins = 50,
                  unsigned threads = 1);

/// Closed-form single-center deflection, alpha = 2 atan(k/(m v0^2 b));
/// the independent reference for the integrator. Throws
/// std::invalid_argument for b <= 0.
double analytic_single_center_angle(double b, double strength, double mass,
                                    double speed);

}  // namespace statmc
