#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <vector>

#include "statmc/rng.hpp"

using statmc::Rng;
using statmc::StreamId;

namespace {

// Independent reference: the same seeding recurrence and additive
// lagged-Fibonacci stepping, written deque-style instead of ring-style.
class ReferenceLfg {
public:
    explicit ReferenceLfg(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (;;) {
            history_.clear();
            std::uint64_t acc = s;
            for (int i = 0; i < 55; ++i) {
                acc = acc * 6364136223846793005ULL + 1442695040888963407ULL;
                history_.push_back(static_cast<std::uint32_t>(acc >> 32));
            }
            if (std::any_of(history_.begin(), history_.end(),
                            [](std::uint32_t w) { return w != 0; }))
                break;
            s += 1;
        }
        for (int i = 0; i < 550; ++i) next();
    }

    std::uint32_t next() {
        // x_n = x_{n-24} + x_{n-55}; history back() is x_{n-1}.
        const std::uint32_t v =
            history_[history_.size() - 24] + history_[history_.size() - 55];
        history_.push_back(v);
        history_.pop_front();
        return v;
    }

private:
    std::deque<std::uint32_t> history_;
};

}  // namespace

TEST_CASE("same seed gives identical streams") {
    Rng a(0);
    Rng b(0);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_word() == b.next_word());
}

TEST_CASE("generator matches the independent reference implementation") {
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 42ULL, 0xDEADBEEFULL}) {
        Rng rng(seed);
        ReferenceLfg ref(seed);
        for (int i = 0; i < 2000; ++i) {
            INFO("seed ", seed, " draw ", i);
            REQUIRE(rng.next_word() == ref.next());
        }
    }
}

TEST_CASE("nearby seeds give different streams") {
    Rng a(1);
    Rng b(2);
    bool differs = false;
    for (int i = 0; i < 100 && !differs; ++i) differs = a.next_word() != b.next_word();
    CHECK(differs);
}

TEST_CASE("next_uniform stays in [0,1)") {
    Rng rng(42);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.next_uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("uniform mean over 1e6 draws") {
    Rng rng(7);
    double sum = 0.0;
    const int n = 1'000'000;
    for (int i = 0; i < n; ++i) sum += rng.next_uniform();
    const double mean = sum / n;
    // 5 sigma with sigma = (1/sqrt(12))/1000
    CHECK(mean > 0.4985);
    CHECK(mean < 0.5015);
}

TEST_CASE("uniform chi-square over 100 bins") {
    Rng rng(7);
    const int n = 1'000'000;
    const int bins = 100;
    std::array<std::uint64_t, bins> counts{};
    for (int i = 0; i < n; ++i) {
        auto idx = static_cast<std::size_t>(rng.next_uniform() * bins);
        counts[std::min<std::size_t>(idx, bins - 1)] += 1;
    }
    const double expected = static_cast<double>(n) / bins;
    double chi2 = 0.0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    // 99 degrees of freedom, far tails excluded
    CHECK(chi2 > 60.0);
    CHECK(chi2 < 150.0);
}

TEST_CASE("Kolmogorov-Smirnov against uniform for seeds 1..10") {
    const int n = 100000;
    int passed = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed);
        std::vector<double> draws(n);
        for (auto& d : draws) d = rng.next_uniform();
        std::sort(draws.begin(), draws.end());
        double ks = 0.0;
        for (int i = 0; i < n; ++i) {
            const double cdf = draws[i];
            ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
            ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n - cdf));
        }
        if (ks < 0.02) passed += 1;
    }
    CHECK(passed >= 9);
}

TEST_CASE("quantized draws") {
    Rng rng(3);
    SUBCASE("q=1 is always zero") {
        for (int i = 0; i < 100; ++i) CHECK(rng.next_uniform_quantized(1) == 0.0);
    }
    SUBCASE("q=1000 lands on the grid") {
        for (int i = 0; i < 10000; ++i) {
            const double u = rng.next_uniform_quantized(1000);
            const double k = u * 1000.0;
            CHECK(k == std::round(k));
            CHECK(u >= 0.0);
            CHECK(u < 1.0);
        }
    }
    SUBCASE("q=2 is a fair coin") {
        const int n = 100000;
        int zeros = 0;
        for (int i = 0; i < n; ++i)
            if (rng.next_uniform_quantized(2) == 0.0) zeros += 1;
        const double frac = static_cast<double>(zeros) / n;
        CHECK(frac > 0.49);
        CHECK(frac < 0.51);
    }
    SUBCASE("q=0 is rejected") {
        CHECK_THROWS_AS((void)rng.next_uniform_quantized(0), std::invalid_argument);
    }
}

TEST_CASE("bernoulli") {
    Rng rng(5);
    SUBCASE("degenerate p") {
        for (int i = 0; i < 1000; ++i) CHECK_FALSE(rng.bernoulli(0.0));
        for (int i = 0; i < 1000; ++i) CHECK(rng.bernoulli(1.0));
    }
    SUBCASE("p=0.4 frequency") {
        const int n = 100000;
        int hits = 0;
        for (int i = 0; i < n; ++i)
            if (rng.bernoulli(0.4)) hits += 1;
        const double frac = static_cast<double>(hits) / n;
        CHECK(frac > 0.392);
        CHECK(frac < 0.408);
    }
    SUBCASE("out-of-range p") {
        CHECK_THROWS_AS((void)rng.bernoulli(-0.1), std::invalid_argument);
        CHECK_THROWS_AS((void)rng.bernoulli(1.1), std::invalid_argument);
    }
}

TEST_CASE("choose_weighted") {
    Rng rng(11);
    SUBCASE("single weight") {
        const std::vector<double> w{1.0};
        for (int i = 0; i < 100; ++i) CHECK(rng.choose_weighted(w) == 0);
    }
    SUBCASE("degenerate mass") {
        const std::vector<double> w{0.0, 1.0, 0.0};
        for (int i = 0; i < 1000; ++i) CHECK(rng.choose_weighted(w) == 1);
    }
    SUBCASE("source frequencies within 5 sigma") {
        const std::vector<double> w{0.3, 0.25, 0.45};
        const int n = 100000;
        std::array<int, 3> counts{};
        for (int i = 0; i < n; ++i) counts[rng.choose_weighted(w)] += 1;
        for (int k = 0; k < 3; ++k) {
            const double frac = static_cast<double>(counts[k]) / n;
            CHECK(std::abs(frac - w[k]) < 0.01);
        }
    }
    SUBCASE("invalid weights") {
        CHECK_THROWS_AS((void)rng.choose_weighted(std::vector<double>{}),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)rng.choose_weighted(std::vector<double>{0.0, 0.0}),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)rng.choose_weighted(std::vector<double>{0.5, -0.1}),
                        std::invalid_argument);
    }
}

TEST_CASE("stream derivation is deterministic and decorrelated") {
    SUBCASE("same id, same stream") {
        Rng a = Rng::from_stream(9, 4);
        Rng b = Rng::from_stream(StreamId{9, 4});
        for (int i = 0; i < 200; ++i) CHECK(a.next_word() == b.next_word());
    }
    SUBCASE("distinct stream indices differ") {
        Rng a = Rng::from_stream(1, 0);
        Rng b = Rng::from_stream(1, 1);
        bool differs = false;
        for (int i = 0; i < 100 && !differs; ++i)
            differs = a.next_word() != b.next_word();
        CHECK(differs);
    }
    SUBCASE("distinct roots differ") {
        Rng a = Rng::from_stream(1, 0);
        Rng b = Rng::from_stream(2, 0);
        bool differs = false;
        for (int i = 0; i < 100 && !differs; ++i)
            differs = a.next_word() != b.next_word();
        CHECK(differs);
    }
    SUBCASE("derived seeds are injective in the index") {
        // The mixing is a bijection of the index for a fixed root; spot
        // check a block of indices for collisions.
        std::vector<std::uint64_t> seeds;
        for (std::uint64_t i = 0; i < 1000; ++i)
            seeds.push_back(Rng::derive_seed(123, i));
        std::sort(seeds.begin(), seeds.end());
        CHECK(std::adjacent_find(seeds.begin(), seeds.end()) == seeds.end());
    }
}

TEST_CASE("range invariant over ten million draws") {
    Rng rng(1);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 10'000'000; ++i) {
        const double u = rng.next_uniform();
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
}
