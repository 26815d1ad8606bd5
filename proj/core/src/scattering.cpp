#include "statmc/scattering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "statmc/errors.hpp"
#include "statmc/parallel.hpp"

namespace statmc {

void ScatteringConfig::validate() const {
    if (centers.empty())
        throw std::invalid_argument("scattering: need at least one center");
    for (const auto& c : centers)
        if (!(c.strength > 0.0))
            throw std::invalid_argument("scattering: center strengths must be > 0 (repulsive)");
    if (!(mass > 0.0)) throw std::invalid_argument("scattering: mass must be > 0");
    if (!(speed > 0.0)) throw std::invalid_argument("scattering: speed must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("scattering: dt must be > 0");
    // A degenerate interval (b_min == b_max) pins every particle to one b.
    if (!(b_min <= b_max)) throw std::invalid_argument("scattering: b_min must be <= b_max");
    if (max_steps == 0) throw std::invalid_argument("scattering: max_steps must be >= 1");
    for (const auto& c : centers)
        if (!(start_x < c.position.x))
            throw std::invalid_argument("scattering: start_x must lie left of every center");
}

Vec2 force_at(const Vec2& point, const std::vector<ChargeCenter>& centers) {
    Vec2 f;
    for (const auto& c : centers) {
        const double dx = point.x - c.position.x;
        const double dy = point.y - c.position.y;
        const double r2 = dx * dx + dy * dy;
        const double r = std::sqrt(r2);
        if (r < 1e-9)
            throw SingularityError("scattering: field point within 1e-9 of a center");
        const double scale = c.strength / (r2 * r);  // k/r^2 along the unit vector
        f.x += scale * dx;
        f.y += scale * dy;
    }
    return f;
}

namespace {

struct PhaseState {
    Vec2 pos;
    Vec2 vel;
};

struct PhaseDeriv {
    Vec2 dpos;
    Vec2 dvel;
};

inline PhaseDeriv rhs(const PhaseState& s, const ScatteringConfig& cfg) {
    const Vec2 f = force_at(s.pos, cfg.centers);
    return {s.vel, {f.x / cfg.mass, f.y / cfg.mass}};
}

inline PhaseState advance(const PhaseState& s, const PhaseDeriv& d, double h) {
    return {{s.pos.x + h * d.dpos.x, s.pos.y + h * d.dpos.y},
            {s.vel.x + h * d.dvel.x, s.vel.y + h * d.dvel.y}};
}

inline double total_energy(const PhaseState& s, const ScatteringConfig& cfg) {
    double e = 0.5 * cfg.mass * (s.vel.x * s.vel.x + s.vel.y * s.vel.y);
    for (const auto& c : cfg.centers) {
        const double dx = s.pos.x - c.position.x;
        const double dy = s.pos.y - c.position.y;
        e += c.strength / std::sqrt(dx * dx + dy * dy);
    }
    return e;
}

TrajectoryOutcome integrate_impl(double b, const ScatteringConfig& cfg) {
    TrajectoryOutcome out;
    out.b = b;

    PhaseState s{{cfg.start_x, b}, {cfg.speed, 0.0}};
    const double e0 = total_energy(s, cfg);
    const double escape_radius = 10.0 * std::abs(cfg.start_x);
    const double h = cfg.dt;

    try {
        for (std::uint64_t step = 0; step < cfg.max_steps; ++step) {
            const PhaseDeriv k1 = rhs(s, cfg);
            const PhaseDeriv k2 = rhs(advance(s, k1, 0.5 * h), cfg);
            const PhaseDeriv k3 = rhs(advance(s, k2, 0.5 * h), cfg);
            const PhaseDeriv k4 = rhs(advance(s, k3, h), cfg);
            s.pos.x += h / 6.0 * (k1.dpos.x + 2.0 * k2.dpos.x + 2.0 * k3.dpos.x + k4.dpos.x);
            s.pos.y += h / 6.0 * (k1.dpos.y + 2.0 * k2.dpos.y + 2.0 * k3.dpos.y + k4.dpos.y);
            s.vel.x += h / 6.0 * (k1.dvel.x + 2.0 * k2.dvel.x + 2.0 * k3.dvel.x + k4.dvel.x);
            s.vel.y += h / 6.0 * (k1.dvel.y + 2.0 * k2.dvel.y + 2.0 * k3.dvel.y + k4.dvel.y);
            out.steps_used = step + 1;

            if (s.pos.x > cfg.stop_x ||
                std::hypot(s.pos.x, s.pos.y) > escape_radius) {
                out.status = TrajectoryStatus::escaped;
                out.alpha = std::atan2(s.vel.y, s.vel.x);
                out.energy_drift =
                    std::abs(total_energy(s, cfg) - e0) / std::max(std::abs(e0), 1e-300);
                out.energy_ok = out.energy_drift <= cfg.energy_tolerance;
                out.last_position = s.pos;
                out.last_velocity = s.vel;
                return out;
            }
        }
    } catch (const SingularityError&) {
        out.status = TrajectoryStatus::singular;
        out.last_position = s.pos;
        out.last_velocity = s.vel;
        return out;
    }

    out.status = TrajectoryStatus::max_steps_exceeded;
    out.last_position = s.pos;
    out.last_velocity = s.vel;
    return out;
}

}  // namespace

TrajectoryOutcome integrate_trajectory(double b, const ScatteringConfig& cfg) {
    cfg.validate();
    if (!(b >= cfg.b_min && b <= cfg.b_max))
        throw std::invalid_argument("integrate_trajectory: b outside b_range");

    TrajectoryOutcome out = integrate_impl(b, cfg);
    if (out.status == TrajectoryStatus::singular)
        throw SingularityError("scattering: trajectory passed within 1e-9 of a center");
    if (out.status == TrajectoryStatus::max_steps_exceeded)
        throw NonEscapeError("scattering: particle did not escape in " +
                                 std::to_string(cfg.max_steps) + " steps",
                             out.last_position.x, out.last_position.y, out.steps_used);
    return out;
}

SweepResult sweep(const ScatteringConfig& cfg, std::size_t bins, unsigned threads) {
    cfg.validate();
    if (cfg.particles == 0)
        throw std::invalid_argument("sweep: particles must be >= 1");

    std::vector<TrajectoryOutcome> outcomes(cfg.particles);
    parallel_for(cfg.particles, threads, [&](std::size_t i) {
        Rng rng = Rng::from_stream(cfg.seed, i);
        const double b = cfg.b_min + (cfg.b_max - cfg.b_min) * rng.next_uniform();
        outcomes[i] = integrate_impl(b, cfg);
    });

    Histogram hist(-std::numbers::pi, std::numbers::pi, bins);
    for (const auto& o : outcomes)
        if (o.status == TrajectoryStatus::escaped) hist.add(o.alpha);
    return {std::move(hist), std::move(outcomes)};
}

double analytic_single_center_angle(double b, double strength, double mass,
                                    double speed) {
    if (!(b > 0.0))
        throw std::invalid_argument("analytic_single_center_angle: b must be > 0");
    return 2.0 * std::atan(strength / (mass * speed * speed * b));
}

}  // namespace statmc
