#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hypinvol/genus2.hpp"

using namespace hypinvol;
using namespace hypinvol::genus2;

namespace {

const double kBound = std::acosh((5.0 + std::sqrt(17.0)) / 2.0);
const double kBetaStar = 2.0 * kBound;
const double kBetaBolza = 2.0 * std::acosh(11.0 + 8.0 * std::sqrt(2.0));

Genus2Surface smax_surface() {
    return build(fricke::maximal_torus(kBetaStar), Alignment::height_aligned);
}

Genus2Surface bolza_aligned_surface() {
    return build(fricke::maximal_torus(kBetaBolza), Alignment::height_aligned);
}

// Random valid piece at the given boundary length (falls back to the
// maximal one when the draw is incompatible).
fricke::TorusPiece random_piece(double beta, std::mt19937& rng) {
    const double xmax = fricke::maximal_torus(beta).traces.x;
    std::uniform_real_distribution<double> pick(2.05, xmax + 2.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            const double x = pick(rng), y = pick(rng);
            const auto [zlo, zhi] = fricke::solve_third_trace(x, y, beta);
            const double z = (rng() & 1u) ? zhi : zlo;
            if (z > 2.0) return fricke::TorusPiece(beta, fricke::TraceTriple(x, y, z));
            if (zhi > 2.0) return fricke::TorusPiece(beta, fricke::TraceTriple(x, y, zhi));
        } catch (const NoRealSolution&) {
        }
    }
    return fricke::maximal_torus(beta);
}

}  // namespace

TEST_CASE("build: round trip, parity rejection, twist bookkeeping") {
    const auto piece = fricke::maximal_torus(kBetaStar);
    const Genus2Surface s = build(piece, Alignment::height_aligned);
    CHECK(s.beta == piece.beta);
    CHECK(s.piece.traces.x == piece.traces.x);
    CHECK(s.aligned());

    CHECK_THROWS_AS(build(piece, Alignment::height_aligned, 0.0, Parity::preserving),
                    ParityError);
    CHECK_THROWS_AS(build(piece, Alignment::height_aligned, 0.3), GluingError);
    CHECK(!build(piece, Alignment::twisted, 0.3).aligned());

    const InvolutionDescriptor tau = involution(s);
    CHECK(tau.parity == Parity::reversing);
    CHECK(tau.boundary_rotation == doctest::Approx(s.beta / 2.0));
}

TEST_CASE("displacement_aligned: extremal, bolza-aligned, min branch, twisted error") {
    const Genus2Surface sm = smax_surface();
    const double d = displacement_aligned(sm);
    CHECK(d == doctest::Approx(kBound).epsilon(1e-10));
    CHECK(d == doctest::Approx(2.1985730).epsilon(1e-6));
    // Both branches coincide at the extremal surface.
    const double h = hypmath::height_from_geodesic(sm.piece.systole(), sm.beta);
    CHECK(h == doctest::Approx(sm.beta / 2.0).epsilon(1e-10));

    const Genus2Surface bz = bolza_aligned_surface();
    CHECK(displacement_aligned(bz) == doctest::Approx(1.3695150).epsilon(1e-6));
    CHECK(displacement_aligned(bz) <
          bz.beta / 2.0);  // min picks the doubled height

    // A piece with a short interior systole: displacement is its height.
    std::mt19937 rng(5);
    const double beta = 4.0;
    const double x = 2.001;
    const double y2 = (x * x - 2.0 + 2.0 * std::cosh(beta / 2.0)) / (x - 2.0);
    const auto piece =
        fricke::TorusPiece(beta, fricke::TraceTriple(x, std::sqrt(y2), std::sqrt(y2)));
    const Genus2Surface tiny = build(piece, Alignment::height_aligned);
    const double ht = hypmath::height_from_geodesic(piece.systole(), beta);
    CHECK(displacement_aligned(tiny) == doctest::Approx(ht).epsilon(1e-12));
    CHECK(ht < beta / 2.0);

    CHECK_THROWS_AS(displacement_aligned(build(piece, Alignment::twisted, 0.5)),
                    AlignmentError);
}

TEST_CASE("displacement_sampled: extremal double hits beta/2 on the axis") {
    const Genus2Surface sm = smax_surface();
    const SampledDisplacement sd = displacement_sampled(sm, 24, 6);
    CHECK(sd.value == doctest::Approx(kBound).epsilon(1e-6));
    CHECK(sd.slack >= -1e-6);
    CHECK(sd.slack <= 1e-6);
    CHECK(sd.value > 0.1);  // the involution moves every sampled point
}

TEST_CASE("displacement_sampled: bolza-aligned hits the doubled height") {
    const Genus2Surface bz = bolza_aligned_surface();
    const SampledDisplacement sd = displacement_sampled(bz, 60, 6);
    CHECK(sd.value >= displacement_aligned(bz) - 1e-6);
    CHECK(sd.value == doctest::Approx(displacement_aligned(bz)).epsilon(1e-6));

    const Genus2Surface tw = build(bz.piece, Alignment::twisted, 0.4);
    CHECK_THROWS_AS(displacement_sampled(tw, 4, 3), GluingError);
}

TEST_CASE("smax certificate") {
    const auto [s, cert] = smax();
    CHECK(s.aligned());
    CHECK(cert.pass());
    CHECK(cert.values.at("displacement") == doctest::Approx(2.1985730).epsilon(1e-6));
    CHECK(cert.values.at("systole_count") == 6.0);
    CHECK(cert.values.at("systole") == doctest::Approx(2.3599320).epsilon(1e-6));
    CHECK(cert.values.at("comparison_bound_c1") ==
          doctest::Approx(std::sqrt(4.0 * 3.14159265358979)).epsilon(1e-9));
    CHECK(cert.values.at("comparison_bound_c1") == doctest::Approx(3.5449077).epsilon(1e-6));
    CHECK(!cert.caveats.empty());
}

TEST_CASE("bolza certificate: censuses of both gluings, displacement, beta") {
    const auto [s, cert] = bolza();
    CHECK(s.aligned());
    CHECK(cert.pass());
    CHECK(cert.values.at("systole") == doctest::Approx(3.0571418).epsilon(1e-6));
    CHECK(cert.values.at("systole_count") == 12.0);
    CHECK(cert.values.at("aligned_min_count") == 3.0);
    CHECK(cert.values.at("aligned_min_length") == doctest::Approx(2.7390299).epsilon(1e-6));
    CHECK(cert.values.at("displacement_aligned_double") ==
          doctest::Approx(1.3695150).epsilon(1e-6));
    CHECK(cert.values.at("beta") == doctest::Approx(7.5956918).epsilon(1e-6));
    CHECK(cert.values.at("beta") > kBetaStar);
    CHECK(cert.values.at("displacement_aligned_double") < 2.1985730);
    CHECK(cert.caveats.size() >= 2);
}

TEST_CASE("verify_sharp_bound: equality only at the extremal double, random sweep") {
    const Certificate ext = verify_sharp_bound(smax_surface());
    CHECK(ext.pass());
    CHECK(ext.values.at("attains_bound") == 1.0);

    const Certificate bz = verify_sharp_bound(bolza_aligned_surface());
    CHECK(bz.pass());
    CHECK(bz.values.at("attains_bound") == 0.0);
    CHECK(bz.values.at("displacement") < kBound - 0.5);

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> betas(0.5, 12.0);
    for (int i = 0; i < 500; ++i) {
        const double beta = betas(rng);
        const Genus2Surface s =
            build(random_piece(beta, rng), Alignment::height_aligned);
        const Certificate c = verify_sharp_bound(s);
        CHECK(c.pass());
        CHECK(c.values.at("displacement") <= kBound + 1e-9);
        if (c.values.at("attains_bound") == 1.0) {
            CHECK(std::fabs(std::cosh(s.piece.systole() / 2.0) -
                            (3.0 + std::sqrt(17.0)) / 4.0) < 1e-9);
        }
    }
}

TEST_CASE("local maximality: perturbing beta strictly lowers the displacement") {
    for (double delta : {0.01, 0.1, -0.01, -0.1}) {
        const double beta = kBetaStar + delta;
        const Genus2Surface s =
            build(fricke::maximal_torus(beta), Alignment::height_aligned);
        CHECK(displacement_aligned(s) < kBound - 1e-6 * std::fabs(delta));
    }
}

TEST_CASE("displacement equals half the shortest invariant class") {
    for (const Genus2Surface& s : {smax_surface(), bolza_aligned_surface()}) {
        const auto gens = generators(s);
        const std::vector<halfplane::Isometry> gv(gens.begin(), gens.end());
        const halfplane::Isometry tau = involution_lift(s);
        const double disp = displacement_aligned(s);

        const auto classes =
            halfplane::geodesic_classes(gv, 2.0 * disp + 0.3, 8);
        double shortest_invariant = 1e300;
        for (const auto& cls : classes) {
            const halfplane::Isometry w = halfplane::word_isometry(gv, cls.word);
            const halfplane::Isometry conj =
                halfplane::compose(halfplane::compose(tau, w), halfplane::invert(tau));
            if (halfplane::same_geodesic_class(gv, conj, w, 3))
                shortest_invariant = std::min(shortest_invariant, cls.length);
        }
        CHECK(shortest_invariant / 2.0 == doctest::Approx(disp).epsilon(1e-6));
    }
}

TEST_CASE("systole dichotomy: image classes are systole classes, disjoint or equal") {
    // Extremal double: the involution swaps the six piece systoles in
    // disjoint pairs. Aligned double of the systole-maximal piece: the
    // three minimal classes are the doubled heights, each invariant.
    for (const Genus2Surface& s : {smax_surface(), bolza_aligned_surface()}) {
        const auto gens = generators(s);
        const std::vector<halfplane::Isometry> gv(gens.begin(), gens.end());
        const halfplane::Isometry tau = involution_lift(s);

        const double minimal =
            std::min(s.piece.systole(),
                     2.0 * hypmath::height_from_geodesic(s.piece.systole(), s.beta));
        const auto classes = halfplane::geodesic_classes(gv, minimal + 1e-6, 8);
        REQUIRE((classes.size() == 6 || classes.size() == 3));
        int self_count = 0;
        for (const auto& cls : classes) {
            const halfplane::Isometry w = halfplane::word_isometry(gv, cls.word);
            const halfplane::Isometry image =
                halfplane::compose(halfplane::compose(tau, w), halfplane::invert(tau));
            // The image is again a minimal class...
            int matches = 0;
            bool self = false;
            for (const auto& other : classes) {
                const halfplane::Isometry v = halfplane::word_isometry(gv, other.word);
                if (halfplane::same_geodesic_class(gv, image, v, 3)) {
                    ++matches;
                    self = halfplane::same_geodesic_class(gv, w, v, 3);
                    // ...and is either the class itself or disjoint from it.
                    if (!self) CHECK(!halfplane::classes_intersect(gv, w, v, 4));
                }
            }
            CHECK(matches == 1);
            if (self) ++self_count;
        }
        // Piece systoles swap across the gluing; doubled heights are fixed.
        if (classes.size() == 6) CHECK(self_count == 0);
        if (classes.size() == 3) CHECK(self_count == 3);
    }
}

TEST_CASE("twist structure: quarter-period twist has no lift, sixth-period is trivial") {
    // The systole-maximal curve (quarter-period twist) carries no
    // fixed-point-free involution: the glide fails to exchange the pieces.
    const auto curve = bolza_curve_generators();
    CHECK_THROWS_AS(halfplane::lift_involution(curve, kBetaBolza), GluingError);

    // Twisting a maximal piece by beta/6 lands on the same surface as the
    // aligned gluing (the piece's sixfold symmetry normalizes the group):
    // identical spectra.
    const auto piece = fricke::maximal_torus(kBetaBolza);
    const auto aligned = halfplane::genus2_generators(piece, piece, kBetaBolza, 0.0);
    const auto sixth =
        halfplane::genus2_generators(piece, piece, kBetaBolza, kBetaBolza / 6.0);
    const std::vector<halfplane::Isometry> ga(aligned.begin(), aligned.end());
    const std::vector<halfplane::Isometry> gs(sixth.begin(), sixth.end());
    const auto sa = halfplane::length_spectrum(ga, 3.2, 8);
    const auto ss = halfplane::length_spectrum(gs, 3.2, 8);
    REQUIRE(sa.entries.size() == ss.entries.size());
    for (size_t i = 0; i < sa.entries.size(); ++i) {
        CHECK(sa.entries[i].length ==
              doctest::Approx(ss.entries[i].length).epsilon(1e-9));
        CHECK(sa.entries[i].multiplicity == ss.entries[i].multiplicity);
    }
}

TEST_CASE("three heights: feet evenly spaced along beta, pairwise disjoint") {
    // On the aligned double every height doubles into a closed geodesic
    // crossing the gluing axis at its feet; the three doubled heights of a
    // maximal piece have six evenly spaced feet.
    for (double beta : {kBetaBolza, 5.0}) {
        const Genus2Surface s =
            build(fricke::maximal_torus(beta), Alignment::height_aligned);
        const auto gens = generators(s);
        const std::vector<halfplane::Isometry> gv(gens.begin(), gens.end());
        const double h = hypmath::height_from_geodesic(s.piece.systole(), beta);

        const auto classes = halfplane::geodesic_classes(gv, 2.0 * h + 1e-6, 8);
        std::vector<halfplane::GeodesicClass> heights;
        for (const auto& cls : classes)
            if (std::fabs(cls.length - 2.0 * h) < 1e-9 * (1.0 + h)) heights.push_back(cls);
        REQUIRE(heights.size() == 3);

        std::vector<double> feet;
        for (const auto& cls : heights) {
            const halfplane::Isometry w = halfplane::word_isometry(gv, cls.word);
            double f = std::fmod(halfplane::axis_crossing_height(w), beta);
            if (f < 0) f += beta;
            feet.push_back(f);
            feet.push_back(std::fmod(f + beta / 2.0, beta));
        }
        std::sort(feet.begin(), feet.end());
        for (size_t i = 0; i < feet.size(); ++i) {
            const double gap = (i + 1 < feet.size()) ? feet[i + 1] - feet[i]
                                                     : feet[0] + beta - feet[i];
            CHECK(gap == doctest::Approx(beta / 6.0).epsilon(1e-8));
        }

        for (size_t i = 0; i < heights.size(); ++i) {
            for (size_t j = i + 1; j < heights.size(); ++j) {
                const auto wi = halfplane::word_isometry(gv, heights[i].word);
                const auto wj = halfplane::word_isometry(gv, heights[j].word);
                CHECK(!halfplane::classes_intersect(gv, wi, wj, 4));
            }
        }
    }
}
