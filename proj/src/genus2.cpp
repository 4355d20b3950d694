#include "hypinvol/genus2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypinvol::genus2 {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Real extremal_cosh_half_sigma() { return (3.0 + std::sqrt(17.0)) / 4.0; }

Real bolza_beta() {
    // Boundary of the maximal piece whose systole is 2 arccosh(1+sqrt(2)):
    // cosh(beta/2) = 4c^3 - 6c^2 + 1 = 11 + 8 sqrt(2) at c = 1+sqrt(2).
    return 2.0 * std::acosh(11.0 + 8.0 * std::sqrt(2.0));
}

std::vector<Isometry> gens_vec(const std::array<Isometry, 4>& g) {
    return std::vector<Isometry>(g.begin(), g.end());
}

}  // namespace

Genus2Surface build(const TorusPiece& piece, Alignment alignment, Real twist,
                    Parity requested_parity) {
    if (requested_parity == Parity::preserving)
        throw ParityError(
            "build: a fixed-point-free involution in even genus reverses orientation");
    if (alignment == Alignment::height_aligned && twist != 0.0)
        throw GluingError("build: height-aligned surfaces carry no twist");
    return Genus2Surface{piece, piece.beta, alignment, twist};
}

InvolutionDescriptor involution(const Genus2Surface& s) {
    return InvolutionDescriptor{Parity::reversing, s.beta / 2.0};
}

std::array<Isometry, 4> generators(const Genus2Surface& s, const Tol& tol) {
    return halfplane::genus2_generators(s.piece, s.piece, s.beta, s.twist, tol);
}

Isometry involution_lift(const Genus2Surface& s, const Tol& tol) {
    if (!s.aligned())
        throw AlignmentError("involution_lift: only height-aligned gluings carry the lift");
    return halfplane::lift_involution(generators(s, tol), s.beta, tol);
}

Real displacement_aligned(const Genus2Surface& s) {
    if (!s.aligned())
        throw AlignmentError(
            "displacement_aligned: twisted gluings only admit sampled upper bounds");
    const Real h = hypmath::height_from_geodesic(s.piece.systole(), s.beta);
    return std::min(s.beta / 2.0, h);
}

SampledDisplacement displacement_sampled(const Genus2Surface& s, int n_samples,
                                         int word_cutoff) {
    if (n_samples < 1) throw DomainError("displacement_sampled: need n_samples >= 1");
    const auto gens = generators(s);
    const auto gv = gens_vec(gens);
    const Isometry tau = halfplane::lift_involution(gens, s.beta);

    const Real aligned_value = displacement_aligned(s);

    // Sample along the gluing axis and along the axes of every class short
    // enough to realize the displacement.
    std::vector<halfplane::HPoint> samples;
    const auto classes =
        halfplane::geodesic_classes(gv, 2.0 * aligned_value + 0.25, std::min(word_cutoff, 8));
    const int groups = 1 + static_cast<int>(classes.size());
    const int per_group = std::max(1, n_samples / groups);
    for (int k = 0; k < per_group; ++k) {
        const Real t = s.beta * (k + 0.5) / per_group;
        samples.emplace_back(0.0, std::exp(t));
    }
    for (const auto& cls : classes) {
        const Isometry w = halfplane::word_isometry(gv, cls.word);
        for (int k = 0; k < per_group; ++k) {
            const Real t = cls.length * (k + 0.5) / per_group;
            samples.push_back(halfplane::point_on_axis(w, t));
        }
    }
    while (static_cast<int>(samples.size()) < n_samples) {
        const Real t = s.beta * (0.13 + samples.size() * 0.37);
        samples.emplace_back(0.0, std::exp(std::fmod(t, s.beta)));
    }

    Real best = std::numeric_limits<Real>::infinity();
    for (const auto& p : samples) {
        const halfplane::HPoint q = halfplane::apply(tau, p);
        best = std::min(best, halfplane::orbit_min_dist(p, q, gv, word_cutoff));
    }
    return SampledDisplacement{best, best - aligned_value};
}

std::pair<Genus2Surface, Certificate> smax() {
    const fricke::Extremal11 ext = fricke::extremal_11();
    const TorusPiece piece = fricke::maximal_torus(ext.beta);
    const Genus2Surface s = build(piece, Alignment::height_aligned);

    const auto gv = gens_vec(generators(s));
    const Real sigma = piece.systole();
    const auto spec = halfplane::length_spectrum(gv, sigma + 0.14, 8);

    const Real disp = displacement_aligned(s);
    const Real bound = hypmath::sharp_genus2_bound();
    const Real comparison = std::sqrt(1.0 * 2.0 * kPi * (2.0 * 2.0 - 2.0));

    Certificate cert;
    cert.claim_id = "smax";
    cert.tolerance = 1e-9;
    cert.values = {
        {"displacement", disp},
        {"beta", s.beta},
        {"systole", spec.entries.empty() ? 0.0 : spec.entries[0].length},
        {"systole_count", spec.entries.empty() ? 0.0 : spec.entries[0].multiplicity},
        {"comparison_bound_c1", comparison},
        {"comparison_c_range_intro_low", kPi / 4.0},
        {"comparison_c_range_intro_high", 1.0},
        {"comparison_c_range_general_low", kPi / 2.0},
        {"comparison_c_range_general_high", 2.0},
    };
    cert.residuals = {
        {"displacement_vs_sharp_bound", disp - bound},
        {"spectrum_vs_piece_systole",
         (spec.entries.empty() ? 1.0 : spec.entries[0].length) - sigma},
        {"systole_count_vs_six",
         (spec.entries.empty() ? -6.0 : spec.entries[0].multiplicity - 6.0)},
        {"sigma_vs_radical", sigma - 2.0 * std::acosh(extremal_cosh_half_sigma())},
    };
    cert.caveats = {
        "systole_count counts unoriented primitive classes at the minimal "
        "spectrum length found within the word ball (cutoff 8); simplicity "
        "is not decided in general.",
        "comparison_bound_c1 uses C = 1; the two published C ranges are "
        "recorded as values without resolving their discrepancy."};
    return {s, cert};
}

std::array<Isometry, 4> bolza_curve_generators(const Tol& tol) {
    const Real beta = bolza_beta();
    const TorusPiece piece = fricke::maximal_torus(beta);
    // Quarter-period twist: the mirror-double twist family has period
    // beta/6 for the maximal piece, and the systole-maximal surface sits
    // at the midpoint beta/12, where the crossing classes are longest.
    return halfplane::genus2_generators(piece, piece, beta, beta / 12.0, tol);
}

std::pair<Genus2Surface, Certificate> bolza() {
    const Real beta = bolza_beta();
    const TorusPiece piece = fricke::maximal_torus(beta);
    const Genus2Surface s = build(piece, Alignment::height_aligned);

    const Real sigma = piece.systole();
    const Real sigma_expected = 2.0 * std::acosh(1.0 + std::sqrt(2.0));
    const Real disp = displacement_aligned(s);
    const Real smax_disp = hypmath::sharp_genus2_bound();

    const auto curve = gens_vec(bolza_curve_generators());
    const auto curve_spec = halfplane::length_spectrum(curve, sigma + 0.14, 8);
    const auto aligned_spec =
        halfplane::length_spectrum(gens_vec(generators(s)), sigma + 0.14, 8);

    Certificate cert;
    cert.claim_id = "bolza";
    cert.tolerance = 1e-9;
    cert.values = {
        {"beta", beta},
        {"systole", curve_spec.entries.empty() ? 0.0 : curve_spec.entries[0].length},
        {"systole_count",
         curve_spec.entries.empty() ? 0.0 : curve_spec.entries[0].multiplicity},
        {"displacement_aligned_double", disp},
        {"aligned_min_length",
         aligned_spec.entries.empty() ? 0.0 : aligned_spec.entries[0].length},
        {"aligned_min_count",
         aligned_spec.entries.empty() ? 0.0 : aligned_spec.entries[0].multiplicity},
        {"smax_displacement", smax_disp},
    };
    cert.residuals = {
        {"systole_vs_radical",
         (curve_spec.entries.empty() ? 0.0 : curve_spec.entries[0].length) -
             sigma_expected},
        {"systole_count_vs_twelve",
         curve_spec.entries.empty() ? -12.0 : curve_spec.entries[0].multiplicity - 12.0},
        {"piece_systole_vs_radical", sigma - sigma_expected},
        {"displacement_gap_below_smax",
         std::max(0.0, 0.8 - (smax_disp - disp))},
        {"beta_longer_than_smax",
         std::max(0.0, 2.0 * hypmath::sharp_genus2_bound() - beta)},
    };
    cert.caveats = {
        "The 12-systole census lives on the quarter-period twisted double "
        "(the systole-maximal curve); census verified for that gluing at "
        "word cutoff 8.",
        "The height-aligned double of the same piece carries the "
        "fixed-point-free involution but its doubled heights have length "
        "2 h_sigma < 2 arccosh(1+sqrt(2)); its census is recorded under "
        "aligned_min_length / aligned_min_count.",
        "displacement_aligned_double refers to the aligned double; the "
        "twisted curve admits no fixed-point-free involution."};
    return {s, cert};
}

Certificate verify_sharp_bound(const Genus2Surface& s) {
    const Real disp = displacement_aligned(s);
    const Real bound = hypmath::sharp_genus2_bound();
    const Real c = std::cosh(s.piece.systole() / 2.0);
    const bool attains =
        s.aligned() && std::fabs(c - extremal_cosh_half_sigma()) < 1e-9;

    Certificate cert;
    cert.claim_id = "sharp-displacement-bound";
    cert.tolerance = 1e-9;
    cert.values = {
        {"displacement", disp},
        {"sharp_bound", bound},
        {"attains_bound", attains ? 1.0 : 0.0},
    };
    cert.residuals = {
        {"excess_over_bound", std::max(0.0, disp - bound)},
    };
    if (attains)
        cert.caveats = {"bound attained: this is the extremal double"};
    return cert;
}

}  // namespace hypinvol::genus2
