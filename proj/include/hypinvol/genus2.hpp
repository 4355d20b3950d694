#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hypinvol/certificate.hpp"
#include "hypinvol/fricke.hpp"
#include "hypinvol/halfplane.hpp"

// Genus-2 surfaces assembled from two mirror one-holed tori glued along
// the separating geodesic beta, carrying the orientation-reversing
// fixed-point-free involution that swaps the halves and rotates beta by
// half its length. The untwisted gluing is the one admitting the
// involution; every height then doubles to a closed geodesic.

namespace hypinvol::genus2 {

using fricke::TorusPiece;
using halfplane::Isometry;
using hypmath::Real;
using hypmath::Tol;

enum class Alignment { height_aligned, twisted };
enum class Parity { preserving, reversing };

struct InvolutionDescriptor {
    Parity parity = Parity::reversing;   // forced in genus 2
    Real boundary_rotation;              // beta/2: the half-turn on beta
};

struct Genus2Surface {
    TorusPiece piece;  // left half; the right half is its mirror image
    Real beta;
    Alignment alignment;
    Real twist;  // 0 for height_aligned

    bool aligned() const { return alignment == Alignment::height_aligned; }
};

// Assemble the mirror double. Requests for an orientation-preserving
// involution are rejected: an even-genus fixed-point-free involution
// reverses orientation.
Genus2Surface build(const TorusPiece& piece, Alignment alignment, Real twist = 0.0,
                    Parity requested_parity = Parity::reversing);

InvolutionDescriptor involution(const Genus2Surface& s);

// Fuchsian generators and the involution lift for the surface.
std::array<Isometry, 4> generators(const Genus2Surface& s, const Tol& tol = Tol{});
Isometry involution_lift(const Genus2Surface& s, const Tol& tol = Tol{});

// min_p d(p, tau(p)) for the aligned gluing: min(beta/2, h_sigma), the
// gluing curve against the doubled height of the piece systole.
Real displacement_aligned(const Genus2Surface& s);

struct SampledDisplacement {
    Real value;  // min over samples of d(p, tau(p)); an upper bound
    Real slack;  // value - displacement_aligned(s)
};

// Sampled orbit distances d(p, tau(p)) over points on the gluing axis and
// on the axes of the shortest classes.
SampledDisplacement displacement_sampled(const Genus2Surface& s, int n_samples,
                                         int word_cutoff);

// The displacement-maximal surface: aligned double of the extremal piece.
std::pair<Genus2Surface, Certificate> smax();

// The systole-maximal surface data: the aligned double of the maximal
// piece with systole 2 arccosh(1+sqrt(2)) is returned (it carries the
// involution); the certificate also records the census of the
// quarter-period twisted double, which is where the 12-systole count of
// the systole-maximal curve lives. See the certificate caveats.
std::pair<Genus2Surface, Certificate> bolza();

// Generators of the quarter-period twisted double of the same maximal
// piece: the systole-maximal genus-2 surface itself.
std::array<Isometry, 4> bolza_curve_generators(const Tol& tol = Tol{});

// Verdict on the sharp displacement bound: pass iff
// displacement_aligned(s) <= arccosh((5+sqrt(17))/2) + 1e-9, with an
// attains_bound flag raised only for the extremal double.
Certificate verify_sharp_bound(const Genus2Surface& s);

}  // namespace hypinvol::genus2
