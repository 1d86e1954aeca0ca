#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "b92sec/attack_model.hpp"

#include <cmath>

using namespace b92;
using doctest::Approx;

static const double kPi = 3.14159265358979323846;

TEST_CASE("zero disturbance means zero probe rotation") {
    AttackGeometry g = geometry_from_error(kPi / 8, 0.0);
    CHECK(g.alpha == 0.0);
    CHECK(g.theta_prime == Approx(kPi / 8).epsilon(1e-15));
    CHECK(g.error_rate() == 0.0);
}

TEST_CASE("frozen geometry values at theta = 22.5 degrees, p_e = 1e-8") {
    AttackGeometry g = geometry_from_error(kPi / 8, 1e-8);
    CHECK(g.alpha == Approx(0.00999866686162557).epsilon(1e-12));
    // quarter-power estimate is within 5 percent here
    CHECK(std::abs(g.alpha / 1e-2 - 1.0) < 0.05);
    CHECK(alpha_small_angle(kPi / 8, 1e-8) == Approx(1e-2).epsilon(1e-12));
}

TEST_CASE("frozen geometry at theta = 30 degrees") {
    AttackGeometry g = geometry_from_error(kPi / 6, 1e-8);
    CHECK(g.alpha == Approx(0.01315846117286418).epsilon(1e-12));
    CHECK(alpha_small_angle(kPi / 6, 1e-8) == Approx(0.013160740129524924).epsilon(1e-12));
}

TEST_CASE("small-angle estimate converges on the exact inversion") {
    for (double theta : {kPi / 8, kPi / 6, 0.3}) {
        std::vector<double> errs;
        for (double pe : {1e-6, 1e-8, 1e-10}) {
            double ratio = geometry_from_error(theta, pe).alpha / alpha_small_angle(theta, pe);
            errs.push_back(std::abs(ratio - 1.0));
            CHECK(errs.back() < 2e-3);
        }
        CHECK(errs[1] < errs[0]);  // improves as pe drops
        CHECK(errs[2] < errs[1]);
    }
}

TEST_CASE("geometry round-trips the error rate and satisfies unitarity") {
    for (int i = 1; i <= 10; ++i) {
        double theta = i * (kPi / 4) / 11.0;
        for (int j = 0; j <= 9; ++j) {
            double pe = std::pow(10.0, -1.0 - j) * std::sin(theta) * std::sin(theta);
            AttackGeometry g = geometry_from_error(theta, pe);
            REQUIRE(g.error_rate() == Approx(pe).epsilon(1e-10));
            REQUIRE(std::abs(g.unitarity_residual()) <= 1e-12);
            REQUIRE(g.alpha >= 0.0);
            REQUIRE(g.theta_prime <= theta);
            // the two constructions agree
            AttackGeometry h = geometry_from_alpha(theta, g.alpha);
            REQUIRE(h.theta_prime == Approx(g.theta_prime).epsilon(1e-12));
        }
    }
}

TEST_CASE("geometry rejects out-of-range inputs") {
    CHECK_THROWS_AS(geometry_from_error(0.0, 1e-3), GeometryError);
    CHECK_THROWS_AS(geometry_from_error(kPi / 4, 1e-3), GeometryError);
    CHECK_THROWS_AS(geometry_from_error(-0.1, 1e-3), GeometryError);
    CHECK_THROWS_AS(geometry_from_error(kPi / 8, -1e-3), GeometryError);
    // p_e above sin^2(theta) is unreachable
    double cap = std::sin(kPi / 8) * std::sin(kPi / 8);
    CHECK_THROWS_AS(geometry_from_error(kPi / 8, cap * 1.0001), GeometryError);
    CHECK_NOTHROW(geometry_from_error(kPi / 8, cap * 0.9999));
    CHECK_THROWS_AS(geometry_from_alpha(kPi / 8, kPi / 8 + 1e-6), GeometryError);
    CHECK_NOTHROW(geometry_from_alpha(kPi / 8, kPi / 8 - 1e-6));
}

TEST_CASE("frozen normalized error rates, both conventions, theta = pi/8, p_e = 0.01") {
    AttackGeometry g = geometry_from_error(kPi / 8, 0.01);
    CHECK(g.theta_prime == Approx(0.29253166053716434).epsilon(1e-13));

    ErrorModel sq = normalized_error_rate(g, PcConvention::squared);
    CHECK(sq.p_c == Approx(0.4005012562893381).epsilon(1e-12));
    CHECK(sq.p_e_norm == Approx(0.024360461379323017).epsilon(1e-12));

    ErrorModel li = normalized_error_rate(g, PcConvention::linear);
    CHECK(li.p_c == Approx(0.6328516858548597).epsilon(1e-12));
    CHECK(li.p_e_norm == Approx(0.015555687602657632).epsilon(1e-12));

    // default convention is squared
    CHECK(normalized_error_rate(g).p_e_norm == Approx(sq.p_e_norm).epsilon(1e-15));
    CHECK(sq.p_e == Approx(0.01).epsilon(1e-12));
}

TEST_CASE("small-alpha normalized rate scales as alpha^4 with the stated prefactor") {
    double theta = kPi / 8;
    double c2t = std::cos(2 * theta), s2t = std::sin(2 * theta);
    double pref = 2.0 * c2t * c2t / (s2t * s2t * s2t * s2t);
    for (double alpha : {1e-3, 1e-2}) {
        double q = normalized_error_rate_small_alpha(theta, alpha);
        CHECK(q == Approx(pref * std::pow(alpha, 4)).epsilon(1e-12));
    }
    // the exact squared-convention rate approaches half that form from below
    for (double pe : {1e-10, 1e-12}) {
        AttackGeometry g = geometry_from_error(theta, pe);
        double exact = normalized_error_rate(g, PcConvention::squared).p_e_norm;
        double approx = normalized_error_rate_small_alpha(theta, g.alpha);
        CHECK(exact / approx == Approx(0.5).epsilon(1e-4));
    }
}

TEST_CASE("failure probability: frozen values and exact small cases") {
    CHECK(failure_probability(7, 0.0) == 0.0);
    CHECK(failure_probability(7, 1.0) == Approx(1.0).epsilon(1e-12));
    CHECK(failure_probability(2, 0.5) == Approx(0.25).epsilon(1e-14));
    CHECK(failure_probability(7, 1e-4) == Approx(2.0993001049916005e-07).epsilon(1e-12));
    CHECK(failure_probability(7, 1e-6) == Approx(2.0999930000104997e-11).epsilon(1e-12));
    CHECK(failure_probability(7, 0.5) == Approx(0.9375).epsilon(1e-13));
    // leading term 21 q^2 for n = 7
    for (double q : {1e-4, 1e-5, 1e-6}) {
        double ratio = failure_probability(7, q) / (21.0 * q * q);
        CHECK(ratio > 0.999);
        CHECK(ratio <= 1.0);
    }
}

TEST_CASE("failure probability is monotone in n and q") {
    for (int n = 2; n <= 9; ++n) {
        for (double q : {1e-6, 1e-4, 1e-2, 0.1, 0.3}) {
            double p = failure_probability(n, q);
            REQUIRE(p >= 0.0);
            REQUIRE(p <= 1.0);
            REQUIRE(failure_probability(n + 1, q) >= p);
            REQUIRE(failure_probability(n, q * 1.5 < 1.0 ? q * 1.5 : 1.0) >= p);
        }
    }
}

TEST_CASE("failure probability input validation") {
    CHECK_THROWS_AS(failure_probability(1, 0.1), GeometryError);
    CHECK_THROWS_AS(failure_probability(2, -0.1), GeometryError);
    CHECK_THROWS_AS(failure_probability(2, 1.1), GeometryError);
}
