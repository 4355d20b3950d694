#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hypinvol/halfplane.hpp"

using namespace hypinvol;
using namespace hypinvol::halfplane;

namespace {

const double kTrace = (3.0 + std::sqrt(17.0)) / 2.0;
const double kBetaStar = 2.0 * std::acosh((5.0 + std::sqrt(17.0)) / 2.0);
const double kSigmaStar = 2.0 * std::acosh((3.0 + std::sqrt(17.0)) / 4.0);

fricke::TorusPiece extremal_piece() { return fricke::maximal_torus(kBetaStar); }

std::array<Isometry, 4> smax_generators() {
    const auto piece = extremal_piece();
    return genus2_generators(piece, piece, kBetaStar, 0.0);
}

Isometry random_isometry(std::mt19937& rng) {
    std::uniform_real_distribution<double> len(-2.0, 2.0);
    std::uniform_real_distribution<double> ang(0.0, 6.28);
    Isometry g = compose(Isometry::rotation_about_i(ang(rng)),
                         Isometry::axis_translation(len(rng)));
    g = compose(g, Isometry::rotation_about_i(ang(rng)));
    if (rng() & 1u) g = compose(g, Isometry::mirror());
    return g;
}

HPoint random_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> xs(-3.0, 3.0);
    std::uniform_real_distribution<double> ys(0.1, 4.0);
    return HPoint(xs(rng), ys(rng));
}

double mat_gap(const Isometry& g, const Isometry& h) {
    const double dp = std::max(std::max(std::fabs(g.a - h.a), std::fabs(g.b - h.b)),
                               std::max(std::fabs(g.c - h.c), std::fabs(g.d - h.d)));
    const double dm = std::max(std::max(std::fabs(g.a + h.a), std::fabs(g.b + h.b)),
                               std::max(std::fabs(g.c + h.c), std::fabs(g.d + h.d)));
    return std::min(dp, dm);
}

}  // namespace

TEST_CASE("dist: vertical geodesic, horizontal pair, coincident points") {
    CHECK(dist(HPoint(0.0, 1.0), HPoint(0.0, std::exp(1.0))) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dist(HPoint(0.0, 1.0), HPoint(1.0, 1.0)) ==
          doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
    CHECK(dist(HPoint(0.0, 1.0), HPoint(1.0, 1.0)) == doctest::Approx(0.9624237).epsilon(1e-6));
    CHECK(dist(HPoint(0.4, 2.0), HPoint(0.4, 2.0)) == 0.0);
    CHECK_THROWS_AS(HPoint(0.0, -1.0), DomainError);
}

TEST_CASE("group operations: identity, parity arithmetic, isometric invariance") {
    std::mt19937 rng(101);
    const Isometry id = Isometry::identity();
    for (int i = 0; i < 300; ++i) {
        const Isometry g = random_isometry(rng);
        CHECK(mat_gap(compose(id, g), g) < 1e-12);
        CHECK(mat_gap(compose(g, id), g) < 1e-12);
        CHECK(compose(g, invert(g)).is_near_identity(1e-10));
        CHECK(compose(invert(g), g).is_near_identity(1e-10));

        const Isometry h = random_isometry(rng);
        const Isometry k = random_isometry(rng);
        // Associativity.
        CHECK(mat_gap(compose(compose(g, h), k), compose(g, compose(h, k))) < 1e-10);
        // Parity composes as sign multiplication.
        const bool rev = (g.parity == Parity::reversing) != (h.parity == Parity::reversing);
        CHECK((compose(g, h).parity == Parity::reversing) == rev);

        const HPoint p = random_point(rng);
        const HPoint q = random_point(rng);
        CHECK(std::fabs(dist(apply(g, p), apply(g, q)) - dist(p, q)) < 1e-10);
        // Action respects composition.
        const HPoint via_compose = apply(compose(g, h), p);
        const HPoint via_steps = apply(g, apply(h, p));
        CHECK(std::fabs(via_compose.x - via_steps.x) < 1e-9);
        CHECK(std::fabs(via_compose.y - via_steps.y) < 1e-9);
    }
    CHECK(compose(Isometry::mirror(), Isometry::mirror()).parity == Parity::preserving);
    CHECK(compose(Isometry::mirror(), Isometry::mirror()).is_near_identity(1e-14));
}

TEST_CASE("translation_length: diagonal, trace 3, parabolic, glide") {
    CHECK(translation_length(Isometry::axis_translation(1.7)) ==
          doctest::Approx(1.7).epsilon(1e-13));
    const Isometry t3(2.0, 1.0, 1.0, 1.0);  // det 1, trace 3
    CHECK(translation_length(t3) == doctest::Approx(2.0 * std::acosh(1.5)).epsilon(1e-13));
    CHECK(translation_length(t3) == doctest::Approx(1.9248473).epsilon(1e-6));
    CHECK_THROWS_AS(translation_length(Isometry(1.0, 1.0, 0.0, 1.0)), NotHyperbolic);
    // Glide length is half the translation length of the square.
    CHECK(translation_length(Isometry::axis_glide(0.9)) == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("axis utilities") {
    std::mt19937 rng(103);
    for (int i = 0; i < 200; ++i) {
        Isometry g = random_isometry(rng);
        if (g.parity == Parity::reversing) g = compose(g, Isometry::mirror());
        if (std::fabs(g.trace()) <= 2.01) continue;
        const AxisEndpoints e = axis_endpoints(g);
        // Fixed points map to themselves.
        if (!std::isinf(e.attracting)) {
            const double img = (g.a * e.attracting + g.b) / (g.c * e.attracting + g.d);
            CHECK(std::fabs(img - e.attracting) < 1e-6 * (1.0 + std::fabs(e.attracting)));
        }
        const Isometry c = conjugate_axis_to_standard(g);
        const Isometry diag = compose(compose(c, g), invert(c));
        CHECK(std::fabs(diag.b) < 1e-7 * (1.0 + std::fabs(diag.a)));
        CHECK(std::fabs(diag.c) < 1e-7 * (1.0 + std::fabs(diag.a)));
        CHECK(std::fabs(diag.a) > std::fabs(diag.d));  // attracting end is up

        // Points on the axis are translated by exactly the translation length.
        const HPoint p0 = point_on_axis(g, 0.3);
        const HPoint p1 = apply(g, p0);
        CHECK(std::fabs(dist(p0, p1) - translation_length(g)) < 1e-9);
    }
}

TEST_CASE("genus2_generators: relation, traces, gluing-curve length") {
    const auto gens = smax_generators();
    const auto [A1, B1, A2, B2] = gens;

    // Left piece traces.
    CHECK(A1.trace() == doctest::Approx(kTrace).epsilon(1e-9));
    CHECK(A1.trace() == doctest::Approx(3.5615528).epsilon(1e-6));
    CHECK(B1.trace() == doctest::Approx(kTrace).epsilon(1e-9));
    CHECK(compose(A1, B1).trace() == doctest::Approx(kTrace).epsilon(1e-9));
    // Mirror piece traces.
    CHECK(A2.trace() == doctest::Approx(kTrace).epsilon(1e-9));
    CHECK(compose(A2, B2).trace() == doctest::Approx(kTrace).epsilon(1e-9));

    // Commutator: the gluing curve of length beta.
    const Isometry k = compose(compose(A1, B1), compose(invert(A1), invert(B1)));
    CHECK(std::fabs(k.trace()) == doctest::Approx(2.0 * std::cosh(kBetaStar / 2.0)).epsilon(1e-9));
    CHECK(translation_length(k) == doctest::Approx(kBetaStar).epsilon(1e-6));

    // Surface relation [A1,B1][A2,B2] = 1.
    const Isometry k2 = compose(compose(A2, B2), compose(invert(A2), invert(B2)));
    CHECK(compose(k, k2).is_near_identity(1e-8));

    // Piece mismatch is rejected.
    const auto piece = extremal_piece();
    const auto other = fricke::maximal_torus(5.0);
    CHECK_THROWS_AS(genus2_generators(piece, other, kBetaStar, 0.0), GluingError);
}

TEST_CASE("lift_involution: square, parity, exchange of pieces") {
    const auto gens = smax_generators();
    const Isometry tau = lift_involution(gens, kBetaStar);
    CHECK(tau.parity == Parity::reversing);

    const Isometry tau2 = compose(tau, tau);
    CHECK(translation_length(tau2) == doctest::Approx(kBetaStar).epsilon(1e-6));
    CHECK(translation_length(tau2) == doctest::Approx(4.3971460).epsilon(1e-5));

    // tau^2 is the primitive gluing translation.
    const Isometry k = compose(compose(gens[0], gens[1]),
                               compose(invert(gens[0]), invert(gens[1])));
    CHECK(std::min(mat_gap(tau2, k), mat_gap(tau2, invert(k))) < 1e-8);

    // Applying tau twice equals applying the gluing translation.
    std::mt19937 rng(107);
    for (int i = 0; i < 50; ++i) {
        const HPoint p = random_point(rng);
        const HPoint a = apply(tau, apply(tau, p));
        const HPoint b1 = apply(k, p);
        const HPoint b2 = apply(invert(k), p);
        const double gap = std::min(std::hypot(a.x - b1.x, a.y - b1.y),
                                    std::hypot(a.x - b2.x, a.y - b2.y));
        CHECK(gap < 1e-8 * (1.0 + a.y));
    }

    // Twisted gluings admit no lift.
    const auto piece = extremal_piece();
    const auto twisted = genus2_generators(piece, piece, kBetaStar, 0.37);
    CHECK_THROWS_AS(lift_involution(twisted, kBetaStar), GluingError);
}

TEST_CASE("orbit_min_dist: degenerate, diametric point, cutoff monotone") {
    const auto gens = smax_generators();
    const std::vector<Isometry> gv(gens.begin(), gens.end());
    const Isometry tau = lift_involution(gens, kBetaStar);

    const HPoint p(0.0, 1.3);
    CHECK(orbit_min_dist(p, p, gv, 3) == 0.0);

    // A point on the gluing axis is carried half the curve length.
    const HPoint q = apply(tau, p);
    const double d = orbit_min_dist(p, q, gv, 8);
    CHECK(d == doctest::Approx(kBetaStar / 2.0).epsilon(1e-6));
    CHECK(d == doctest::Approx(2.1985730).epsilon(1e-5));

    std::mt19937 rng(109);
    for (int i = 0; i < 5; ++i) {
        const HPoint a = random_point(rng);
        const HPoint b = random_point(rng);
        const double d1 = orbit_min_dist(a, b, gv, 1);
        const double d5 = orbit_min_dist(a, b, gv, 5);
        CHECK(d5 <= d1 + 1e-12);
    }
}

TEST_CASE("length_spectrum: six systoles on the extremal double") {
    const auto gens = smax_generators();
    const std::vector<Isometry> gv(gens.begin(), gens.end());
    const SpectrumResult spec = length_spectrum(gv, 2.5, 8);
    REQUIRE(!spec.entries.empty());
    CHECK(spec.entries[0].length == doctest::Approx(kSigmaStar).epsilon(1e-9));
    CHECK(spec.entries[0].length == doctest::Approx(2.3599320).epsilon(1e-6));
    CHECK(spec.entries[0].multiplicity == 6);
    CHECK(spec.entries.size() == 1);  // nothing else below 2.5
    CHECK(!spec.cutoff_warning);

    // A one-letter ball cannot cover that length cutoff.
    CHECK(length_spectrum(gv, 2.5, 1).cutoff_warning);

    // Reported length equals the translation length of the representative.
    std::vector<Isometry> letters;
    for (int s : spec.entries[0].representative_word) {
        const int idx = std::abs(s) - 1;
        letters.push_back(s > 0 ? gv[idx] : invert(gv[idx]));
    }
    Isometry w = Isometry::identity();
    for (const auto& l : letters) w = compose(w, l);
    CHECK(std::fabs(translation_length(w) - spec.entries[0].length) < 1e-12);
}

TEST_CASE("length_spectrum determinism under generator permutation") {
    const auto gens = smax_generators();
    const std::vector<Isometry> gv(gens.begin(), gens.end());
    const std::vector<Isometry> permuted{gens[2], gens[0], gens[3], gens[1]};
    const SpectrumResult a = length_spectrum(gv, 4.5, 6);
    const SpectrumResult b = length_spectrum(permuted, 4.5, 6);
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].length == doctest::Approx(b.entries[i].length).epsilon(1e-10));
        CHECK(a.entries[i].multiplicity == b.entries[i].multiplicity);
    }
}

TEST_CASE("spectrum CSV is deterministic and dot-separates words") {
    const auto gens = smax_generators();
    const std::vector<Isometry> gv(gens.begin(), gens.end());
    const std::string a = spectrum_to_csv(length_spectrum(gv, 2.5, 8));
    const std::string b = spectrum_to_csv(length_spectrum(gv, 2.5, 8));
    CHECK(a == b);
    CHECK(a.substr(0, 12) == "2.3599320478");
    CHECK(a.find(",6,") != std::string::npos);
}

TEST_CASE("interior systole from the spectrum matches the trace reduction") {
    std::mt19937 rng(113);
    std::uniform_real_distribution<double> betas(2.5, 7.0);
    for (int i = 0; i < 20; ++i) {
        const double beta = betas(rng);
        const auto maximal = fricke::maximal_torus(beta);
        // Random piece at this boundary length.
        std::uniform_real_distribution<double> pick(2.2, maximal.traces.x + 1.5);
        fricke::TorusPiece piece = maximal;
        for (int attempt = 0; attempt < 64; ++attempt) {
            try {
                const double x = pick(rng), y = pick(rng);
                const auto [zlo, zhi] = fricke::solve_third_trace(x, y, beta);
                const double z = (rng() & 1u) ? zhi : zlo;
                if (z <= 2.0) continue;
                piece = fricke::TorusPiece(beta, fricke::TraceTriple(x, y, z));
                break;
            } catch (const NoRealSolution&) {
            }
        }
        const auto gens = genus2_generators(piece, piece, beta, 0.0);
        const std::vector<Isometry> gv(gens.begin(), gens.end());
        const double sys = piece.systole();
        const SpectrumResult spec = length_spectrum(gv, sys + 0.05, 6);
        // Shortest interior class: representative supported on one piece.
        double best = 1e300;
        for (const auto& e : spec.entries) {
            bool left_only = true, right_only = true;
            for (int s : e.representative_word) {
                const int idx = std::abs(s);
                if (idx > 2) left_only = false;
                if (idx <= 2) right_only = false;
            }
            if (left_only || right_only) best = std::min(best, e.length);
        }
        CHECK(best == doctest::Approx(sys).epsilon(1e-8));
    }
}
