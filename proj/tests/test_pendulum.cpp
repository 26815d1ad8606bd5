#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "statmc/errors.hpp"
#include "statmc/pendulum.hpp"
#include "statmc/rng.hpp"

using namespace statmc;

namespace {

PendulumParams quiet_params() {
    PendulumParams p;
    p.damping = 0.0;
    p.drag_coeff = 0.0;
    p.wind_mean = 0.0;
    p.wind_halfwidth = 0.0;
    return p;
}

bool same_trajectory(const std::vector<PendulumState>& a,
                     const std::vector<PendulumState>& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(PendulumState)) == 0;
}

}  // namespace

TEST_CASE("wind process") {
    SUBCASE("no wind, no force") {
        PendulumParams p = quiet_params();
        WindProcess wind(p);
        Rng rng(1);
        for (double t = 0.0; t < 1.0; t += p.dt) CHECK(wind.force(t, rng) == 0.0);
    }
    SUBCASE("steady stream gives c u^2") {
        PendulumParams p;
        p.wind_mean = 2.0;
        p.wind_halfwidth = 0.0;
        p.drag_coeff = 0.5;
        WindProcess wind(p);
        Rng rng(1);
        for (double t = 0.0; t < 1.0; t += p.dt)
            CHECK(wind.force(t, rng) == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("sampled speeds average to the stream mean") {
        PendulumParams p;
        p.wind_mean = 2.0;
        p.wind_halfwidth = 1.0;
        WindProcess wind(p);
        Rng rng(3);
        double sum = 0.0;
        const int refreshes = 10000;
        for (int k = 0; k < refreshes; ++k) {
            wind.force(k * p.wind_refresh, rng);
            sum += wind.current_speed();
        }
        // SE = (du / sqrt(3)) / 100
        CHECK(std::abs(sum / refreshes - 2.0) < 0.03);
    }
}

TEST_CASE("rk4 step") {
    SUBCASE("rest at the stable equilibrium stays put") {
        PendulumParams p = quiet_params();
        const PendulumState s = step_rk4(PendulumState{}, p, 0.0);
        CHECK(s.phi == 0.0);
        CHECK(s.omega == 0.0);
        CHECK(s.t == doctest::Approx(p.dt));
    }
    SUBCASE("constant force settles on tan(phi) = F/(m g)") {
        PendulumParams p;
        p.damping = 0.5;
        const double force = p.mass * p.gravity;  // tan(phi_eq) = 1
        PendulumState s;
        const auto steps = static_cast<long long>(200.0 / p.damping / p.dt);
        for (long long i = 0; i < steps; ++i) s = step_rk4(s, p, force);
        CHECK(std::abs(s.phi - std::numbers::pi / 4.0) < 1e-3);
        CHECK(std::abs(s.omega) < 1e-6);
    }
    SUBCASE("unforced undamped motion conserves energy") {
        PendulumParams p = quiet_params();
        PendulumState s{0.1, 0.0, 0.0};
        const double e0 = pendulum_energy(s, p);
        double max_drift = 0.0;
        for (int i = 0; i < 10000; ++i) {
            s = step_rk4(s, p, 0.0);
            max_drift = std::max(max_drift,
                                 std::abs(pendulum_energy(s, p) - e0) / e0);
        }
        CHECK(max_drift < 1e-8);
    }
    SUBCASE("divergence is reported with its time") {
        PendulumParams p;
        p.dt = 10.0;
        p.wind_refresh = 10.0;
        PendulumState s{0.5, 0.0, 0.0};
        bool diverged = false;
        try {
            for (int i = 0; i < 10000; ++i) s = step_rk4(s, p, 1e308);
        } catch (const DivergenceError& e) {
            diverged = true;
            CHECK(e.time() > 0.0);
        }
        CHECK(diverged);
    }
}

TEST_CASE("halving dt shrinks the step error like a 4th-order method") {
    PendulumParams p = quiet_params();
    const double force = 2.0;   // fixed wind so all runs share the forcing
    const double horizon = 0.5; // short enough that one error term dominates
    auto integrate = [&](double dt) {
        PendulumParams q = p;
        q.dt = dt;
        PendulumState s;
        const auto steps = static_cast<long long>(std::llround(horizon / dt));
        for (long long i = 0; i < steps; ++i) s = step_rk4(s, q, force);
        return s.phi;
    };
    const double ref = integrate(0.02 / 8.0);
    const double err_h = std::abs(integrate(0.02) - ref);
    const double err_h2 = std::abs(integrate(0.01) - ref);
    const double ratio = err_h / err_h2;
    INFO("err(h) = ", err_h, " err(h/2) = ", err_h2, " ratio = ", ratio);
    CHECK(ratio > 8.0);
    CHECK(ratio < 32.0);
}

TEST_CASE("simulate") {
    SUBCASE("zero horizon returns only the initial state") {
        PendulumParams p;
        p.t_total = 0.0;
        p.burn_in = 0.0;
        const auto traj = simulate(p);
        REQUIRE(traj.size() == 1);
        CHECK(traj[0].phi == 0.0);
        CHECK(traj[0].t == 0.0);
    }
    SUBCASE("deterministic wind repeats exactly") {
        PendulumParams p;
        p.wind_halfwidth = 0.0;
        p.t_total = 5.0;
        p.burn_in = 1.0;
        CHECK(same_trajectory(simulate(p), simulate(p)));
    }
    SUBCASE("random wind repeats exactly under a fixed seed") {
        PendulumParams p;
        p.t_total = 5.0;
        p.burn_in = 1.0;
        p.seed = 12;
        CHECK(same_trajectory(simulate(p), simulate(p)));
    }
    SUBCASE("parameter validation") {
        PendulumParams p;
        p.dt = 0.0;
        CHECK_THROWS_AS((void)simulate(p), std::invalid_argument);
        p = PendulumParams{};
        p.wind_refresh = p.dt / 2.0;
        CHECK_THROWS_AS((void)simulate(p), std::invalid_argument);
        p = PendulumParams{};
        p.burn_in = p.t_total;
        CHECK_THROWS_AS((void)simulate(p), std::invalid_argument);
    }
}

TEST_CASE("angle distribution") {
    SUBCASE("steady wind concentrates at the constant-force equilibrium") {
        PendulumParams p;
        p.wind_mean = 2.0;
        p.wind_halfwidth = 0.0;
        p.t_total = 60.0;
        p.burn_in = 50.0;
        const auto traj = simulate(p);
        const auto dist = angle_distribution(traj, p);
        const double force = p.drag_coeff * p.wind_mean * p.wind_mean;
        const double phi_eq = std::atan(force / (p.mass * p.gravity));
        CHECK(std::abs(dist.stats.mean - phi_eq) < 1e-3);
        CHECK(dist.stats.std_dev < 1e-6);
    }
    SUBCASE("no wind at all pins the angle to zero") {
        PendulumParams p;
        p.wind_mean = 0.0;
        p.wind_halfwidth = 0.0;
        p.t_total = 10.0;
        p.burn_in = 2.0;
        const auto dist = angle_distribution(simulate(p), p);
        CHECK(dist.stats.mean == 0.0);
        CHECK(dist.stats.std_dev == 0.0);
    }
    SUBCASE("unidirectional random wind pushes the mean angle positive") {
        PendulumParams p;  // defaults: u0 = 2, du = 1
        p.t_total = 40.0;
        p.burn_in = 10.0;
        const auto dist = angle_distribution(simulate(p), p);
        CHECK(dist.stats.mean > 0.0);
        CHECK(dist.stats.std_dev > 0.0);
        CHECK(dist.histogram.total() > 0);
    }
    SUBCASE("burn-in past the data is rejected") {
        PendulumParams p;
        p.t_total = 1.0;
        p.burn_in = 0.5;
        auto traj = simulate(p);
        traj.resize(100);  // ends before burn_in
        CHECK_THROWS_AS((void)angle_distribution(traj, p), std::invalid_argument);
    }
    SUBCASE("explicit range override is honored") {
        PendulumParams p;
        p.t_total = 5.0;
        p.burn_in = 1.0;
        const auto traj = simulate(p);
        const auto dist =
            angle_distribution(traj, p, 20, std::make_pair(-1.0, 1.0));
        CHECK(dist.histogram.lo() == -1.0);
        CHECK(dist.histogram.hi() == 1.0);
        CHECK(dist.histogram.bins() == 20);
    }
}
