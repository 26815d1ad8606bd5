#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "statmc/random_walk.hpp"
#include "statmc/rng.hpp"

using namespace statmc;

TEST_CASE("walk_once support") {
    Rng rng(1);
    SUBCASE("zero steps") { CHECK(walk_once(rng, 0) == 0); }
    SUBCASE("one step") {
        for (int i = 0; i < 50; ++i) {
            const auto z = walk_once(rng, 1);
            CHECK((z == 1 || z == -1));
        }
    }
    SUBCASE("four steps stay on the even lattice") {
        for (int i = 0; i < 200; ++i) {
            const auto z = walk_once(rng, 4);
            CHECK(std::abs(z) <= 4);
            CHECK(z % 2 == 0);
        }
    }
}

TEST_CASE("parity and range hold across an ensemble") {
    const WalkConfig cfg{31, 2000, 5};
    const auto res = ensemble(cfg);
    REQUIRE(res.final_positions.size() == cfg.trials);
    for (const auto z : res.final_positions) {
        CHECK(std::abs(z) <= static_cast<std::int64_t>(cfg.steps));
        // z and N have the same parity
        CHECK((z - static_cast<std::int64_t>(cfg.steps)) % 2 == 0);
    }
}

TEST_CASE("single-step ensemble has msd exactly one") {
    const auto res = ensemble(WalkConfig{1, 500, 2});
    CHECK(res.msd == 1.0);
}

TEST_CASE("msd matches E[z^2] = N within 5 sigma") {
    // Var[z^2] = 2N(N-1) for the symmetric +-1 walk, so the 5 sigma
    // band is 5 sqrt(2N(N-1)/trials).
    const std::uint64_t trials = 100000;
    for (const std::uint64_t n : {100ULL, 400ULL}) {
        const auto res = ensemble(WalkConfig{n, trials, 1});
        const double tol =
            5.0 * std::sqrt(2.0 * double(n) * double(n - 1) / double(trials));
        INFO("N = ", n, " msd = ", res.msd, " tol = ", tol);
        CHECK(std::abs(res.msd - double(n)) < tol);
    }
}

TEST_CASE("ensemble mean is symmetric around zero") {
    const std::uint64_t n = 100, trials = 50000;
    const auto res = ensemble(WalkConfig{n, trials, 3});
    double mean = 0.0;
    for (auto z : res.final_positions) mean += double(z);
    mean /= double(trials);
    CHECK(std::abs(mean) < 5.0 * std::sqrt(double(n)) / std::sqrt(double(trials)));
}

TEST_CASE("msd_curve basics") {
    SUBCASE("single point, N = 1") {
        const auto curve = msd_curve({1}, 100, 1);
        REQUIRE(curve.size() == 1);
        CHECK(curve[0].steps == 1);
        CHECK(curve[0].msd == 1.0);
        CHECK(curve[0].msd_stderr == 0.0);
    }
    SUBCASE("empty list rejected") {
        CHECK_THROWS_AS((void)msd_curve({}, 100, 1), std::invalid_argument);
    }
    SUBCASE("zero N rejected") {
        CHECK_THROWS_AS((void)msd_curve({0}, 100, 1), std::invalid_argument);
    }
    SUBCASE("duplicate N values use disjoint substreams") {
        const auto curve = msd_curve({64, 64}, 5000, 7);
        CHECK(curve[0].msd != curve[1].msd);  // different trial blocks
        const double tol = 5.0 * std::hypot(curve[0].msd_stderr, curve[1].msd_stderr);
        CHECK(std::abs(curve[0].msd - curve[1].msd) < tol);
    }
}

TEST_CASE("msd curve is linear in N") {
    const std::vector<std::uint64_t> ns{50, 100, 200};
    const auto curve = msd_curve(ns, 100000, 1);
    // least squares on (N, msd)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = double(curve.size());
    for (const auto& pt : curve) {
        sx += double(pt.steps);
        sy += pt.msd;
        sxx += double(pt.steps) * double(pt.steps);
        sxy += double(pt.steps) * pt.msd;
    }
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / k;
    CHECK(std::abs(slope - 1.0) < 0.03);
    CHECK(std::abs(intercept) < 2.0);
}

TEST_CASE("final distribution matches the exact binomial law for N = 10") {
    // z = 2k - N with k ~ Binomial(N, 1/2); chi-square over the 11
    // support points against the exact probabilities.
    const std::uint64_t n = 10, trials = 1000000;
    const auto res = ensemble(WalkConfig{n, trials, 9});

    std::array<double, 11> prob{};
    double binom = 1.0;  // C(10, 0)
    for (int k = 0; k <= 10; ++k) {
        prob[k] = binom / 1024.0;
        binom = binom * double(10 - k) / double(k + 1);
    }
    std::array<std::uint64_t, 11> counts{};
    for (auto z : res.final_positions) {
        const auto k = static_cast<std::size_t>((z + 10) / 2);
        REQUIRE(k < counts.size());
        counts[k] += 1;
    }
    double chi2 = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double expected = prob[k] * double(trials);
        const double d = double(counts[k]) - expected;
        chi2 += d * d / expected;
    }
    INFO("chi2 = ", chi2);
    CHECK(chi2 < 30.0);
}

TEST_CASE("ensemble is schedule independent") {
    const WalkConfig cfg{200, 4000, 11};
    const auto serial = ensemble(cfg, 0, 1);
    const auto threaded = ensemble(cfg, 0, 8);
    CHECK(serial.final_positions == threaded.final_positions);
    CHECK(serial.msd == threaded.msd);
    CHECK(serial.msd_stderr == threaded.msd_stderr);
}
