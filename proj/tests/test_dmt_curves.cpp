#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "relaydmt/allocation.hpp"
#include "relaydmt/dmt_curves.hpp"
#include "relaydmt/piecewise_linear.hpp"

using namespace relaydmt;

namespace {

void check_pointwise_equal(const PiecewiseLinearCurve& a, const PiecewiseLinearCurve& b) {
    const double r_max = std::max(a.r_max(), b.r_max());
    for (int i = 0; i <= 400; ++i) {
        const double r = r_max * i / 400.0;
        CHECK(a(r) == doctest::Approx(b(r)).epsilon(0).scale(1e-12));
    }
}

}  // namespace

TEST_CASE("point-to-point curve vertices") {
    CHECK(ppc_dmt(1, 1).vertices() == std::vector<CurveVertex>{{0, 1}, {1, 0}});
    CHECK(ppc_dmt(2, 2).vertices() == std::vector<CurveVertex>{{0, 4}, {1, 1}, {2, 0}});
    CHECK(ppc_dmt(1, 6).vertices() == std::vector<CurveVertex>{{0, 6}, {1, 0}});

    const auto line = ppc_dmt(1, 6);
    for (int i = 0; i <= 10; ++i) {
        const double r = i / 10.0;
        CHECK(line(r) == doctest::Approx(6.0 * (1.0 - r)).epsilon(1e-14));
    }
}

TEST_CASE("point-to-point curve rejects zero antennas") {
    CHECK_THROWS_AS(ppc_dmt(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ppc_dmt(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(ppc_dmt(-1, 3), std::invalid_argument);
}

TEST_CASE("curve evaluation") {
    const auto c22 = ppc_dmt(2, 2);
    CHECK(c22(0.5) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(ppc_dmt(1, 1)(2.0) == 0.0);
    CHECK(ppc_dmt(1, 6)(1.0) == 0.0);
    CHECK_THROWS_AS(c22(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(c22(std::nan("")), std::invalid_argument);
}

TEST_CASE("curve evaluation is exact at stored vertices") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const auto c = ppc_dmt(m, n);
            for (const auto& v : c.vertices()) CHECK(c(v.r) == v.d);
        }
    const auto mac = mac_sym_dmt(6, 1, 6);
    for (const auto& v : mac.vertices()) CHECK(mac(v.r) == v.d);
}

TEST_CASE("symmetric MAC curve") {
    const auto mac = mac_sym_dmt(6, 1, 6);
    CHECK(mac(0.0) == 6.0);
    // Branch threshold at r = 6/7; both branch formulas must agree there.
    const double r_split = 6.0 / 7.0;
    CHECK(mac(r_split) == doctest::Approx(6.0 / 7.0).epsilon(1e-13));
    CHECK(ppc_dmt(1, 6)(r_split) ==
          doctest::Approx(ppc_dmt(6, 6)(6.0 * r_split)).epsilon(0).scale(1e-12));

    CHECK(mac_sym_dmt(4, 1, 2)(0.25) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("MAC branch continuity across configurations") {
    for (int users = 1; users <= 6; ++users)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 6; ++n) {
                const double r_split = std::min(static_cast<double>(m), n / (users + 1.0));
                const double lhs = ppc_dmt(m, n)(r_split);
                const double rhs = ppc_dmt(users * m, n)(users * r_split);
                CHECK(std::abs(lhs - rhs) <= 1e-12);
                CHECK(mac_sym_dmt(users, m, n)(r_split) ==
                      doctest::Approx(lhs).epsilon(0).scale(1e-12));
            }
}

TEST_CASE("MAC with one user reduces to point-to-point") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            check_pointwise_equal(mac_sym_dmt(1, m, n), ppc_dmt(m, n));
}

TEST_CASE("point-to-point curve is symmetric in (m, n)") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) check_pointwise_equal(ppc_dmt(m, n), ppc_dmt(n, m));
}

TEST_CASE("broadcast curve equals MAC curve") {
    check_pointwise_equal(bc_sym_dmt(3, 1, 6), mac_sym_dmt(3, 1, 6));
    for (int M = 1; M <= 6; ++M) {
        const auto bc = bc_sym_dmt(1, 1, M);
        for (int i = 0; i <= 20; ++i) {
            const double r = i / 20.0;
            CHECK(bc(r) == doctest::Approx(M * (1.0 - r)).epsilon(1e-13));
        }
    }
    CHECK(bc_sym_dmt(2, 1, 2)(0.0) == 2.0);
}

TEST_CASE("curves are nonincreasing and nonnegative") {
    const std::vector<PiecewiseLinearCurve> curves{
        ppc_dmt(3, 5), mac_sym_dmt(6, 1, 6), mac_sym_dmt(4, 1, 2), mac_sym_dmt(2, 2, 3)};
    for (const auto& c : curves) {
        double prev = c(0.0);
        for (int i = 1; i <= 500; ++i) {
            const double d = c(c.r_max() * i / 500.0 + 0.001);
            CHECK(d >= 0.0);
            CHECK(d <= prev + 1e-12);
            prev = d;
        }
    }
}

TEST_CASE("zero crossings") {
    CHECK(ppc_dmt(2, 2).zero_crossing() == 2.0);
    CHECK(mac_sym_dmt(6, 1, 6).zero_crossing() == 1.0);
    CHECK(upper_bound_reciprocal_curve(6).zero_crossing() == 0.5);
}

TEST_CASE("sampled zero crossing interpolates") {
    const std::vector<double> r{0.0, 0.1, 0.2, 0.3};
    const std::vector<double> d{3.0, 2.0, 1.0, 0.0};
    CHECK(first_zero_crossing(r, d) == doctest::Approx(0.3).epsilon(1e-14));
    const std::vector<double> positive{3.0, 2.5, 2.0, 1.5};
    CHECK(std::isnan(first_zero_crossing(r, positive)));
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(PiecewiseLinearCurve({{0.5, 1.0}, {1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseLinearCurve({{0.0, 1.0}, {1.0, 2.0}, {2.0, 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseLinearCurve({{0.0, 1.0}, {0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseLinearCurve({{0.0, 1.0}, {1.0, 0.5}}), std::invalid_argument);
}

TEST_CASE("curve serialization") {
    const auto c = ppc_dmt(2, 2);
    CHECK(c.to_csv() == "r,d\n0,4\n1,1\n2,0\n");

    const auto mac = mac_sym_dmt(6, 1, 6);
    const auto round_trip = PiecewiseLinearCurve::from_json(mac.to_json());
    CHECK(round_trip == mac);
    CHECK(mac.to_json().starts_with("{\"vertices\":[[0.0,6.0],"));
}
