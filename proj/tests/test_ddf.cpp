#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "relaydmt/ddf.hpp"

using namespace relaydmt;

TEST_CASE("alpha profile invariants and bookkeeping") {
    AlphaProfile p;
    p.dims_subset = 2;
    p.dims_relay = 3;
    p.alpha1 = {0.5, 0.25};
    p.alpha2 = 0.3;
    CHECK_NOTHROW(p.validate());
    // weights 2j-1+|L-M|: 2 and 4, downlink weight M = 3
    CHECK(p.objective() == doctest::Approx(2 * 0.5 + 4 * 0.25 + 3 * 0.3).epsilon(1e-15));
    CHECK(p.s1() == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(p.s2() == doctest::Approx(0.7).epsilon(1e-15));

    AlphaProfile bad = p;
    bad.alpha1 = {0.25, 0.5};  // increasing
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.alpha1 = {0.5};  // wrong length
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.alpha1 = {0.5, -0.1};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("outage constraint statistic") {
    CHECK(outage_constraint(0.0, 1.0, 3, 2) == 0.0);
    CHECK(outage_constraint(1.0, 0.0, 3, 2) == 0.0);
    CHECK(outage_constraint(1.0, 1.0, 1, 1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("inner optimization at r = 0 gives full relay diversity") {
    for (int K : {1, 2, 3})
        for (int M : {1, 2, 3, 6})
            for (int L = 1; L <= 2 * K; ++L)
                CHECK(inner_ddf_opt(L, K, M, 0.0) == static_cast<double>(M));
}

TEST_CASE("inner optimization argument validation") {
    CHECK_THROWS_AS(inner_ddf_opt(0, 3, 6, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(inner_ddf_opt(7, 3, 6, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(inner_ddf_opt(1, 3, 6, -0.1), std::invalid_argument);
}

TEST_CASE("inner optimization matches the brute-force alpha grid") {
    // min(L,M)+1 = 2 here, so the oracle grid can afford step 1e-3.
    const double reduced = inner_ddf_opt(1, 3, 6, 0.2);
    CHECK(reduced == doctest::Approx(1.5).epsilon(1e-9));
    oracle::AlphaGridSearch search(1, 3, 6, {0.2}, 1000);
    const double brute = search.run().front();
    CHECK(brute >= reduced - 1e-9);
    CHECK(brute <= reduced + search.resolution_bound() + 1e-9);
}

TEST_CASE("inner optimization is zero once the zero-cost point is feasible") {
    // g(min(L,M), 1) = 6/(3*6+6) = 1/4 for L = 2K = 6, K = 3, M = 6.
    CHECK(inner_ddf_opt(6, 3, 6, 0.25) == 0.0);
    CHECK(inner_ddf_opt(6, 3, 6, 0.4) == 0.0);
}

TEST_CASE("dynamic DF tradeoff for K=3, M=6") {
    const NetworkConfig cfg{3, 6, ChannelMode::nonreciprocal};
    CHECK(ddf_dmt(0.0, cfg) == 6.0);
    CHECK(ddf_dmt(0.2, cfg) == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(ddf_dmt(0.25, cfg) == 0.0);
    CHECK(ddf_dmt(0.3, cfg) == 0.0);

    // All subset sizes tie at M >= 2K, so the reported argmin is the
    // smallest size.
    CHECK(ddf_dmt_detail(0.2, cfg).argmin_subset_size == 1);
}

TEST_CASE("dynamic DF tradeoff monotonicity") {
    for (int K : {1, 2}) {
        double prev = 1e300;
        for (double r = 0.0; r <= 0.4; r += 0.02) {
            const double d = ddf_dmt(r, {K, 4, ChannelMode::nonreciprocal});
            CHECK(d <= prev + 1e-9);
            prev = d;
        }
        for (double r : {0.05, 0.1, 0.15}) {
            double prev_m = 0.0;
            for (int M = 1; M <= 6; ++M) {
                const double d = ddf_dmt(r, {K, M, ChannelMode::nonreciprocal});
                CHECK(d >= prev_m - 1e-9);
                prev_m = d;
            }
        }
    }
}

TEST_CASE("dynamic DF tradeoff never exceeds the converse") {
    for (int K : {1, 2, 3})
        for (int M : {1, 2, 4, 6}) {
            const NetworkConfig cfg{K, M, ChannelMode::nonreciprocal};
            for (double r = 0.0; r < 0.9; r += 0.03)
                CHECK(ddf_dmt(r, cfg) <= upper_bound_nonreciprocal(r, cfg) + 1e-6);
        }
    // Equality at M >= 2K.
    for (int K : {1, 2})
        for (int M = 2 * K; M <= 6; ++M) {
            const NetworkConfig cfg{K, M, ChannelMode::nonreciprocal};
            for (double r = 0.0; r <= 1.0 / (K + 1) + 0.02; r += 0.01)
                CHECK(std::abs(ddf_dmt(r, cfg) - upper_bound_nonreciprocal(r, cfg)) <= 1e-3);
        }
}

TEST_CASE("reduced solver agrees with the alpha-grid oracle on small dims") {
    for (int L : {1, 2})
        for (int M : {1, 2})
            for (int K : {1, 2}) {
                if (L > 2 * K) continue;
                std::vector<double> thresholds;
                for (double r = 0.05; r <= 0.25 + 1e-12; r += 0.05)
                    thresholds.push_back(r);
                oracle::AlphaGridSearch search(L, K, M, thresholds, 400);
                const auto brute = search.run();
                for (std::size_t i = 0; i < thresholds.size(); ++i) {
                    const double reduced = inner_ddf_opt(L, K, M, thresholds[i]);
                    CHECK(brute[i] >= reduced - 1e-9);
                    CHECK(brute[i] <= reduced + search.resolution_bound() + 1e-9);
                }
            }
}

TEST_CASE("non-reciprocal converse closed form") {
    const NetworkConfig cfg{3, 6, ChannelMode::nonreciprocal};
    CHECK(upper_bound_nonreciprocal(0.0, cfg) == 6.0);
    CHECK(upper_bound_nonreciprocal(0.25, cfg) == 0.0);
    CHECK(upper_bound_nonreciprocal(0.1, cfg) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_THROWS_AS(upper_bound_nonreciprocal(1.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(upper_bound_nonreciprocal(-0.2, cfg), std::invalid_argument);
}

TEST_CASE("numerical converse rederivation") {
    const NetworkConfig cfg{3, 6, ChannelMode::nonreciprocal};
    CHECK(converse_outage_opt(0.1, cfg) == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(converse_outage_opt(0.0, cfg) == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(converse_outage_opt(0.25, cfg) == doctest::Approx(0.0).scale(1).epsilon(1e-6));

    // Independent 2-D grid-plus-zoom oracle.
    CHECK(std::abs(converse_outage_opt(0.1, cfg) - oracle::converse_grid2d(3, 6, 0.1)) <= 1e-3);

    for (int K : {1, 2, 3})
        for (int M : {1, 3, 6}) {
            const NetworkConfig c{K, M, ChannelMode::nonreciprocal};
            for (double r = 0.0; r < 1.0; r += 0.05)
                CHECK(std::abs(converse_outage_opt(r, c) - upper_bound_nonreciprocal(r, c)) <=
                      1e-3);
        }
}

TEST_CASE("dynamic listening fraction") {
    CHECK(dynamic_listening_fraction({{1, 2.0}}, 1.0).a == doctest::Approx(0.5));
    CHECK_FALSE(dynamic_listening_fraction({{1, 2.0}}, 1.0).outage);

    CHECK(dynamic_listening_fraction({{1, 3.0}, {2, 4.0}}, 0.0).a == 0.0);

    const auto mixed = dynamic_listening_fraction({{1, 3.0}, {2, 4.0}}, 1.0);
    CHECK(mixed.a == doctest::Approx(0.5).epsilon(1e-15));

    const auto dead = dynamic_listening_fraction({{1, 0.0}}, 1.0);
    CHECK(std::isinf(dead.a));
    CHECK(dead.outage);

    const auto slow = dynamic_listening_fraction({{2, 1.0}}, 1.0);
    CHECK(slow.a == doctest::Approx(2.0));
    CHECK(slow.outage);

    CHECK_THROWS_AS(dynamic_listening_fraction({}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(dynamic_listening_fraction({{0, 1.0}}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(dynamic_listening_fraction({{1, 1.0}}, -1.0), std::invalid_argument);
}
