#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypinvol/fricke.hpp"
#include "hypinvol/hypmath.hpp"

// Upper-half-plane model: points, orientation-signed isometries, distance,
// translation length, Fuchsian generators for genus-2 mirror doubles, orbit
// search, and length-spectrum enumeration. This module is the brute-force
// substrate every closed-form claim is checked against.

namespace hypinvol::halfplane {

using hypmath::Real;
using hypmath::Tol;

struct HPoint {
    Real x, y;

    HPoint(Real x_, Real y_) : x(x_), y(y_) {
        if (!(y > 0.0)) throw DomainError("HPoint: y must be positive");
    }
};

enum class Parity { preserving, reversing };

// Isometry of the upper half-plane. A preserving isometry with matrix m
// acts as z -> (az+b)/(cz+d); a reversing one acts through the mirror
// z -> -conj(z) first, i.e. z -> m . (-conj(z)). Both keep det(m) = +1
// (renormalized on construction), which is why the mirror is folded into
// the action rather than into a negative determinant.
struct Isometry {
    Real a, b, c, d;
    Parity parity;

    Isometry(Real a_, Real b_, Real c_, Real d_, Parity p = Parity::preserving);

    static Isometry identity() { return {1.0, 0.0, 0.0, 1.0}; }
    // Hyperbolic translation by len along the imaginary axis, toward infinity.
    static Isometry axis_translation(Real len);
    // Glide reflection along the imaginary axis: mirror + translation by len.
    static Isometry axis_glide(Real len);
    // z -> -conj(z), the reflection across the imaginary axis.
    static Isometry mirror() { return {1.0, 0.0, 0.0, 1.0, Parity::reversing}; }
    // Rotation by angle about the point i.
    static Isometry rotation_about_i(Real angle);

    Real trace() const { return a + d; }
    bool is_near_identity(Real eps = 1e-6) const;
};

Real dist(const HPoint& p, const HPoint& q);

HPoint apply(const Isometry& g, const HPoint& p);
Isometry compose(const Isometry& g, const Isometry& h);
Isometry invert(const Isometry& g);

// Translation length: 2 arccosh(|tr|/2) for hyperbolic preserving elements;
// for reversing elements, half the translation length of the square (the
// glide length). Throws NotHyperbolic for |tr| <= 2.
Real translation_length(const Isometry& g, const Tol& tol = Tol{});

// Fixed points of a hyperbolic preserving isometry on the boundary circle
// R u {inf}; infinity is encoded as +HUGE_VAL.
struct AxisEndpoints {
    Real repelling;
    Real attracting;
};
AxisEndpoints axis_endpoints(const Isometry& g);

// Isometry taking g's axis to the imaginary axis (repelling -> 0,
// attracting -> infinity).
Isometry conjugate_axis_to_standard(const Isometry& g);

// Point at signed arclength s along g's axis (s = 0 at an arbitrary but
// deterministic basepoint, increasing toward the attracting endpoint).
HPoint point_on_axis(const Isometry& g, Real s);

// Where g's axis crosses the imaginary axis, as the arclength coordinate
// log(y); throws DomainError if it does not cross.
Real axis_crossing_height(const Isometry& g);

// Fuchsian generators A1, B1, A2, B2 for the genus-2 surface obtained by
// gluing `left` to the mirror image of itself along the boundary geodesic
// of length beta, with an extra twist along the gluing curve. The
// commutator [A1,B1] is the gluing curve, diagonal in this normalization,
// and [A1,B1][A2,B2] = 1 holds by construction. `right` must carry the
// mirror of `left`'s trace data.
std::array<Isometry, 4> genus2_generators(const fricke::TorusPiece& left,
                                          const fricke::TorusPiece& right, Real beta,
                                          Real twist, const Tol& tol = Tol{});

// The orientation-reversing lift of the piece-swapping involution for an
// untwisted mirror double: the glide by beta/2 along the gluing axis. Its
// square is the primitive gluing translation, and it conjugates the left
// generators onto the right ones. Throws GluingError when no lift exists
// within tolerance (e.g. for twisted gluings).
Isometry lift_involution(const std::array<Isometry, 4>& gens, Real beta,
                         const Tol& tol = Tol{});

// min over words w of length <= word_cutoff of dist(p, w(q)): an upper
// bound on the quotient distance, nonincreasing in word_cutoff.
Real orbit_min_dist(const HPoint& p, const HPoint& q, const std::vector<Isometry>& gens,
                    int word_cutoff);

// min over words with an odd occurrence count of gens[odd_index] (or its
// inverse) of dist(p, w(p)): the displacement of the deck transformation of
// the index-2 cover determined by that generator's parity.
Real orbit_min_dist_odd_coset(const HPoint& p, const std::vector<Isometry>& gens,
                              int odd_index, int word_cutoff);

struct SpectrumEntry {
    Real length;
    int multiplicity;
    std::vector<int> representative_word;  // signed 1-based generator indices
};

// One unoriented primitive conjugacy class: its length, the boundary
// endpoints of a representative axis (atan coordinates, sorted) and a
// representative word in signed 1-based generator indices.
struct GeodesicClass {
    Real length;
    Real e1, e2;
    std::vector<int> word;
};

// The conjugacy classes behind length_spectrum, one representative each.
std::vector<GeodesicClass> geodesic_classes(const std::vector<Isometry>& gens,
                                            Real length_cutoff, int word_cutoff);

// True when g and h present the same unoriented closed geodesic: some
// conjugate of g by a word of length <= radius equals h or its inverse
// up to sign.
bool same_geodesic_class(const std::vector<Isometry>& gens, const Isometry& g,
                         const Isometry& h, int radius = 3);

// True when the closed geodesics of g and h cross on the quotient,
// decided by endpoint interleaving over conjugates up to the radius.
bool classes_intersect(const std::vector<Isometry>& gens, const Isometry& g,
                       const Isometry& h, int radius = 4);

// Compose a signed 1-based word (as in SpectrumEntry) over the generators.
Isometry word_isometry(const std::vector<Isometry>& gens, const std::vector<int>& word);

struct SpectrumResult {
    std::vector<SpectrumEntry> entries;  // sorted by increasing length
    bool cutoff_warning = false;
};

// All distinct primitive unoriented closed-geodesic classes of length
// <= length_cutoff found among cyclically reduced words of length
// <= word_cutoff. Classes are merged by axis + length, which also folds
// together relation-equal words; multiplicities count unoriented primitive
// conjugacy classes per length.
SpectrumResult length_spectrum(const std::vector<Isometry>& gens, Real length_cutoff,
                               int word_cutoff);

// CSV export: length,multiplicity,word with dot-separated signed indices.
std::string spectrum_to_csv(const SpectrumResult& spec);

}  // namespace hypinvol::halfplane
