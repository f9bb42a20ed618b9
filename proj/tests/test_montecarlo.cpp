#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cogsec/analytic.hpp"
#include "cogsec/channel.hpp"
#include "cogsec/montecarlo.hpp"

using namespace cogsec;
using namespace cogsec::mc;

namespace {

SystemConfig symmetric(int m, int n, double lambda_me) {
    return SystemConfig::symmetric(m, n, 1.0, 1.0, 1.0, 1.0, lambda_me, 1.0);
}

}  // namespace

TEST_CASE("estimates are deterministic and worker-count independent") {
    auto cfg = symmetric(3, 2, 4.0);
    RunOptions serial{.threads = 1};
    RunOptions parallel{.threads = 8};

    auto a = estimate_intercept(cfg, Scheme::Proposed, 100'000, 99, serial);
    auto b = estimate_intercept(cfg, Scheme::Proposed, 100'000, 99, parallel);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);

    auto c = estimate_secrecy_rate(cfg, Scheme::ArtificialNoise, 100'000, 99, serial);
    auto d = estimate_secrecy_rate(cfg, Scheme::ArtificialNoise, 100'000, 99, parallel);
    CHECK(c.value == d.value);
    CHECK(c.std_error == d.std_error);
}

TEST_CASE("blocked sums match a plain serial accumulation") {
    // Recompute the same trial values with the same substreams but a single
    // naive accumulator; the blocked merge must agree to 1e-12 relative.
    auto cfg = symmetric(2, 2, 2.0);
    const std::uint64_t trials = 150'000;
    auto est = estimate_secrecy_rate(cfg, Scheme::Proposed, trials, 7,
                                     RunOptions{.threads = 4});

    long double naive = 0.0L;
    ChannelRealization real;
    for (std::uint64_t block = 0; block * kBlockTrials < trials; ++block) {
        const std::uint64_t begin = block * kBlockTrials;
        const std::uint64_t count = std::min(kBlockTrials, trials - begin);
        RandomStream rng(7, block);
        for (std::uint64_t k = 0; k < count; ++k) {
            sample_realization_into(cfg, rng, real);
            naive += schedule_proposed(cfg, real).secrecy_rate;
        }
    }
    const double naive_mean = static_cast<double>(naive / trials);
    CHECK(std::fabs(est.value - naive_mean) <= 1e-12 * std::fabs(naive_mean));
}

TEST_CASE("intercept estimate matches the symmetric closed form") {
    for (int m : {1, 2, 3}) {
        auto cfg = symmetric(m, 1, 1.0);
        auto est = estimate_intercept(cfg, Scheme::Proposed, 200'000, 1234);
        const double expected = std::pow(2.0, -m);
        const double se = std::sqrt(expected * (1.0 - expected) / 200'000.0);
        CHECK(std::fabs(est.value - expected) <= 3.0 * se);
        CHECK(est.std_error == doctest::Approx(se).epsilon(0.05));
        CHECK_FALSE(est.unresolved);
    }
}

TEST_CASE("quadrupling trials roughly halves the standard error") {
    auto cfg = symmetric(2, 2, 3.0);
    auto small = estimate_intercept(cfg, Scheme::Proposed, 100'000, 5);
    auto large = estimate_intercept(cfg, Scheme::Proposed, 400'000, 5);
    CHECK(large.std_error == doctest::Approx(small.std_error / 2.0).epsilon(0.2));

    auto small_r = estimate_secrecy_rate(cfg, Scheme::Traditional, 50'000, 5);
    auto large_r = estimate_secrecy_rate(cfg, Scheme::Traditional, 200'000, 5);
    CHECK(large_r.std_error == doctest::Approx(small_r.std_error / 2.0).epsilon(0.2));
}

TEST_CASE("estimates are invariant to joint power scaling and to I") {
    auto cfg = symmetric(2, 2, 5.0);
    auto scaled = cfg;
    scaled.interference_cap *= 4.0;
    scaled.noise_cbs *= 4.0;
    for (double& v : scaled.noise_eve) v *= 4.0;

    auto a = estimate_secrecy_rate(cfg, Scheme::Proposed, 50'000, 21);
    auto b = estimate_secrecy_rate(scaled, Scheme::Proposed, 50'000, 21);
    CHECK(a.value == b.value);

    auto boosted = cfg;
    boosted.interference_cap *= 7.25;
    auto pa = estimate_intercept(cfg, Scheme::Traditional, 50'000, 21);
    auto pb = estimate_intercept(boosted, Scheme::Traditional, 50'000, 21);
    CHECK(pa.value == pb.value);
}

TEST_CASE("single-user proposed and traditional estimates coincide") {
    auto cfg = symmetric(1, 2, 2.0);
    auto p = estimate_secrecy_rate(cfg, Scheme::Proposed, 50'000, 3);
    auto t = estimate_secrecy_rate(cfg, Scheme::Traditional, 50'000, 3);
    CHECK(p.value == t.value);
    CHECK(p.std_error == t.std_error);
}

TEST_CASE("artificial-noise estimates accept a single user") {
    // The rate expressions degenerate cleanly at M = 1 even though no
    // explicit noise vector exists there.
    auto cfg = symmetric(1, 2, 10.0);
    auto est = estimate_intercept(cfg, Scheme::ArtificialNoise, 100'000, 8);
    const double bound = analytic::intercept_an_upper_bound_m1(cfg);
    CHECK(est.value < bound);
}

TEST_CASE("deep-tail intercept estimates are flagged unresolved") {
    auto cfg = symmetric(4, 1, 1e6);
    auto est = estimate_intercept(cfg, Scheme::Proposed, 50'000, 9);
    CHECK(est.unresolved);
    CHECK(est.value <= kUnresolvedCountThreshold / 50'000.0);
}

TEST_CASE("sample moments track the analytic moments") {
    for (int n : {1, 2, 4}) {
        auto cfg = symmetric(2, n, 10.0);
        for (int power : {1, 2}) {
            const double expected = power == 1 ? analytic::moment_t_mean(cfg, 1)
                                               : analytic::moment_t_sq_mean(cfg, 1);
            auto est = estimate_moment_t(cfg, 1, power, 400'000, 31);
            REQUIRE(std::fabs(est.value - expected) <= 4.0 * est.std_error);
        }
    }
}

TEST_CASE("sweeps") {
    auto cfg = symmetric(2, 2, 1.0);

    SUBCASE("empty grid yields no rows") {
        auto rows = run_sweep(cfg, {Scheme::Proposed}, {},
                              {Metric::InterceptProbability}, 1000, 1);
        CHECK(rows.empty());
    }

    SUBCASE("one row per scheme, grid point, and metric") {
        auto rows = run_sweep(cfg, {Scheme::Proposed, Scheme::Traditional},
                              {0.0, 10.0, 20.0},
                              {Metric::InterceptProbability,
                               Metric::ErgodicSecrecyRate},
                              2000, 1);
        REQUIRE(rows.size() == 12);
        CHECK(rows[0].lambda_me_db == 0.0);
        CHECK(rows[0].m_users == 2);
        CHECK(rows[0].master_seed == 1);
    }

    SUBCASE("repeat runs are identical") {
        auto a = run_sweep(cfg, {Scheme::Proposed}, {0.0, 10.0},
                           {Metric::InterceptProbability}, 20'000, 77,
                           RunOptions{.threads = 1});
        auto b = run_sweep(cfg, {Scheme::Proposed}, {0.0, 10.0},
                           {Metric::InterceptProbability}, 20'000, 77,
                           RunOptions{.threads = 8});
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].value == b[i].value);
            CHECK(a[i].std_error == b[i].std_error);
        }
    }
}
