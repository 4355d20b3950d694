#include <cmath>
#include <random>

#include "doctest.h"
#include "hypinvol/hypmath.hpp"
#include "support/oracles.hpp"

using namespace hypinvol;
using namespace hypinvol::hypmath;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("area is 2pi(2g-2+n)") {
    CHECK(area(Signature(2, 0)) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK(area(Signature(0, 3)) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(area(Signature(1, 2)) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
}

TEST_CASE("area values are positive multiples of 2pi") {
    for (int g = 0; g <= 5; ++g) {
        for (int n = 0; n <= 5; ++n) {
            bool valid = true;
            try {
                Signature s(g, n);
            } catch (const DomainError&) {
                valid = false;
            }
            if (!valid) continue;
            const double a = area(Signature(g, n));
            CHECK(a > 0.0);
            const double k = a / (2.0 * kPi);
            CHECK(std::fabs(k - std::round(k)) < 1e-12);
        }
    }
}

TEST_CASE("signature validity") {
    CHECK_THROWS_AS(Signature(1, 0), DomainError);
    CHECK_THROWS_AS(Signature(0, 2), DomainError);
    CHECK_THROWS_AS(Signature(0, 0), DomainError);
    CHECK_NOTHROW(Signature(1, 1));
    CHECK_NOTHROW(Signature(2, 0));
}

TEST_CASE("acosh_checked clamps the rounding window and rejects below it") {
    CHECK(acosh_checked(1.0) == 0.0);
    CHECK(acosh_checked(1.0 - 5e-13) == 0.0);
    CHECK_THROWS_AS(acosh_checked(0.5), DomainError);
    CHECK_THROWS_AS(acosh_checked(1.0 - 1e-11), DomainError);

    const double v = (5.0 + std::sqrt(17.0)) / 2.0;
    CHECK(acosh_checked(v) == doctest::Approx(std::acosh(v)).epsilon(1e-15));
    CHECK(acosh_checked(v) == doctest::Approx(2.1985730).epsilon(1e-6));
}

TEST_CASE("collar width: fixed point, decay, domain") {
    const double fix = 2.0 * std::asinh(1.0);
    CHECK(std::fabs(collar_width(fix) - std::asinh(1.0)) < 1e-14);
    CHECK(collar_width(4.0) == doctest::Approx(std::asinh(1.0 / std::sinh(2.0))).epsilon(1e-15));
    CHECK(collar_width(4.0) == doctest::Approx(0.2723419).epsilon(1e-6));
    CHECK(collar_width(0.1) == doctest::Approx(std::asinh(1.0 / std::sinh(0.05))).epsilon(1e-15));
    CHECK(collar_width(0.1) == doctest::Approx(3.6889).epsilon(1e-3));
    CHECK(collar_width(1e-6) > 14.0);
    CHECK_THROWS_AS(collar_width(0.0), DomainError);
    CHECK_THROWS_AS(collar_width(-1.0), DomainError);

    double prev = collar_width(0.05);
    for (double len = 0.1; len < 8.0; len += 0.17) {
        const double w = collar_width(len);
        CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("pentagon_opposite: extremal point, degenerate, direct value") {
    // At the extremal piece the pentagon with both adjacent sides beta/4
    // has opposite side sigma/2.
    const double quarter_beta = std::acosh((5.0 + std::sqrt(17.0)) / 2.0) / 2.0;
    const double half_sigma = std::acosh((3.0 + std::sqrt(17.0)) / 4.0);
    CHECK(pentagon_opposite(quarter_beta, quarter_beta) ==
          doctest::Approx(half_sigma).epsilon(1e-12));
    CHECK(pentagon_opposite(quarter_beta, quarter_beta) ==
          doctest::Approx(1.1799660).epsilon(1e-6));

    CHECK_THROWS_AS(pentagon_opposite(std::asinh(1.0), std::asinh(1.0)), DegenerateError);
    CHECK_THROWS_AS(pentagon_opposite(0.2, 0.2), DegenerateError);

    const double s1 = std::sinh(1.0);
    CHECK(pentagon_opposite(1.0, 1.0) == doctest::Approx(std::acosh(s1 * s1)).epsilon(1e-15));
    CHECK(pentagon_opposite(1.0, 1.0) == doctest::Approx(0.8474).epsilon(1e-4));
}

TEST_CASE("pentagon_opposite agrees with the constructed pentagon") {
    std::mt19937 rng(20240501);
    std::uniform_real_distribution<double> side(0.1, 5.0);
    int checked = 0;
    while (checked < 1000) {
        const double a = side(rng), b = side(rng);
        if (std::sinh(a) * std::sinh(b) <= 1.0 + 1e-9) continue;
        const double measured = oracles::measured_pentagon_opposite(a, b);
        REQUIRE(!std::isnan(measured));
        CHECK(std::fabs(pentagon_opposite(a, b) - measured) < 1e-9);
        ++checked;
    }
}

TEST_CASE("hexagon_opposite: closure point and degenerate input") {
    // The symmetric hexagon closes: middle side from the pants seam gives
    // the opposite side back.
    CHECK(hexagon_opposite(1.0, pants_perp(2.0, 2.0, 2.0), 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // RHS exactly at 1: degenerate hexagon.
    const double m0 = std::acosh((1.0 + std::cosh(1.0) * std::cosh(1.0)) /
                                 (std::sinh(1.0) * std::sinh(1.0)));
    CHECK_THROWS_AS(hexagon_opposite(1.0, m0 - 1e-9, 1.0), DegenerateError);
}

TEST_CASE("hexagon_opposite agrees with the constructed hexagon") {
    std::mt19937 rng(20240502);
    std::uniform_real_distribution<double> side(0.2, 3.0);
    int checked = 0;
    while (checked < 400) {
        const double a = side(rng), m = side(rng), b = side(rng);
        double formula;
        try {
            formula = hexagon_opposite(a, m, b);
        } catch (const DegenerateError&) {
            continue;
        }
        const double measured = oracles::measured_hexagon_opposite(a, m, b);
        REQUIRE(!std::isnan(measured));
        CHECK(std::fabs(formula - measured) < 1e-9);
        ++checked;
    }
}

TEST_CASE("pants_perp: value, symmetry, inversion against hexagon_opposite") {
    const double d = pants_perp(2.0, 2.0, 2.0);
    const double c1 = std::cosh(1.0);
    CHECK(d == doctest::Approx(std::acosh((c1 + c1 * c1) / (std::sinh(1.0) * std::sinh(1.0))))
                   .epsilon(1e-15));
    CHECK(d == doctest::Approx(1.7049).epsilon(1e-4));

    std::mt19937 rng(20240503);
    std::uniform_real_distribution<double> cuff(0.2, 8.0);
    for (int i = 0; i < 1000; ++i) {
        const double li = cuff(rng), lj = cuff(rng), lk = cuff(rng);
        CHECK(std::fabs(pants_perp(li, lj, lk) - pants_perp(lj, li, lk)) < 1e-12);
        const double seam = pants_perp(li, lj, lk);
        CHECK(std::fabs(hexagon_opposite(li / 2.0, seam, lj / 2.0) - lk / 2.0) < 1e-9);
    }
}

TEST_CASE("pants_perp agrees with the shooting-solved hexagon") {
    std::mt19937 rng(20240504);
    std::uniform_real_distribution<double> cuff(0.2, 8.0);
    for (int i = 0; i < 50; ++i) {
        const double li = cuff(rng), lj = cuff(rng), lk = cuff(rng);
        const double solved = oracles::solved_pants_perp(li, lj, lk);
        CHECK(std::fabs(pants_perp(li, lj, lk) - solved) < 1e-9);
    }
}

TEST_CASE("height_from_geodesic: extremal point, Bolza piece, collar limit") {
    const double sigma = 2.0 * std::acosh((3.0 + std::sqrt(17.0)) / 4.0);
    const double beta = 2.0 * std::acosh((5.0 + std::sqrt(17.0)) / 2.0);
    CHECK(height_from_geodesic(sigma, beta) == doctest::Approx(beta / 2.0).epsilon(1e-12));
    CHECK(height_from_geodesic(sigma, beta) == doctest::Approx(2.1985730).epsilon(1e-6));

    const double sigma_b = 2.0 * std::acosh(1.0 + std::sqrt(2.0));
    const double beta_b = 2.0 * std::acosh(11.0 + 8.0 * std::sqrt(2.0));
    const double expected_b =
        2.0 * std::asinh((1.0 + std::sqrt(2.0)) / std::sinh(beta_b / 4.0));
    CHECK(height_from_geodesic(sigma_b, beta_b) == doctest::Approx(expected_b).epsilon(1e-15));
    CHECK(height_from_geodesic(sigma_b, beta_b) == doctest::Approx(1.3695150).epsilon(1e-6));

    for (double beta_t : {1.0, 3.0, 7.0}) {
        CHECK(height_from_geodesic(1e-9, beta_t) ==
              doctest::Approx(2.0 * collar_width(beta_t / 2.0)).epsilon(1e-9));
    }
}

TEST_CASE("height monotone: increasing in gamma, decreasing in beta") {
    for (double beta = 1.0; beta < 9.0; beta += 1.7) {
        double prev = height_from_geodesic(0.05, beta);
        for (double gamma = 0.3; gamma < 6.0; gamma += 0.25) {
            const double h = height_from_geodesic(gamma, beta);
            CHECK(h > prev);
            prev = h;
        }
    }
    for (double gamma = 0.5; gamma < 5.0; gamma += 1.1) {
        double prev = height_from_geodesic(gamma, 0.4);
        for (double beta = 0.8; beta < 10.0; beta += 0.4) {
            const double h = height_from_geodesic(gamma, beta);
            CHECK(h < prev);
            prev = h;
        }
    }
}

TEST_CASE("displacement_lower_bound_glued: fixed point, small-x blowup, monotone") {
    const double fix = 2.0 * std::asinh(1.0);
    CHECK(displacement_lower_bound_glued(fix) == doctest::Approx(fix).epsilon(1e-12));
    CHECK(displacement_lower_bound_glued(fix) == doctest::Approx(1.7627472).epsilon(1e-6));
    CHECK(displacement_lower_bound_glued(0.1) ==
          doctest::Approx(2.0 * std::asinh(1.0 / std::sinh(0.05))).epsilon(1e-15));
    CHECK(displacement_lower_bound_glued(0.1) == doctest::Approx(7.378).epsilon(1e-3));
    CHECK_THROWS_AS(displacement_lower_bound_glued(0.0), DomainError);

    double prev = displacement_lower_bound_glued(0.01);
    for (double x = 0.05; x < 10.0; x += 0.31) {
        const double b = displacement_lower_bound_glued(x);
        CHECK(b < prev);
        prev = b;
    }
}

TEST_CASE("sharp genus-2 bound comes from the radical") {
    CHECK(sharp_genus2_bound() ==
          doctest::Approx(std::acosh((5.0 + std::sqrt(17.0)) / 2.0)).epsilon(1e-16));
    CHECK(sharp_genus2_bound() == doctest::Approx(2.1985730).epsilon(1e-6));
}

TEST_CASE("Tol validation") {
    CHECK_THROWS_AS(acosh_checked(2.0, Tol{0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(acosh_checked(2.0, Tol{1e-12, 1e-9}), DomainError);
    CHECK_NOTHROW(acosh_checked(2.0, Tol{1e-9, 1e-12}));
}
