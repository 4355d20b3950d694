#pragma once

#include <array>
#include <utility>

#include "hypinvol/certificate.hpp"
#include "hypinvol/hypmath.hpp"

// One-holed torus in Fricke trace coordinates (x, y, z) = traces of two
// generators and their product, tied to the boundary length by
//   x^2 + y^2 + z^2 - xyz = 2 - 2 cosh(beta/2).
// Markov moves walk the simple-closed-geodesic triples; the reduced triple
// carries the interior systole.

namespace hypinvol::fricke {

using hypmath::Real;
using hypmath::Tol;

struct TraceTriple {
    Real x, y, z;

    TraceTriple(Real x_, Real y_, Real z_) : x(x_), y(y_), z(z_) {
        if (!(x > 2.0 && y > 2.0 && z > 2.0))
            throw DomainError("TraceTriple: all traces must exceed 2");
    }

    Real max_coord() const { return x >= y ? (x >= z ? x : z) : (y >= z ? y : z); }
    Real min_coord() const { return x <= y ? (x <= z ? x : z) : (y <= z ? y : z); }
};

// Residual of the trace identity against the boundary length.
Real fricke_residual(const TraceTriple& t, Real beta);

struct TorusPiece {
    Real beta;
    TraceTriple traces;

    TorusPiece(Real beta_, const TraceTriple& t);

    // Interior systole of the piece: 2 arccosh(x_min/2) of the reduced triple.
    Real systole() const;
};

// Both roots z-+ of z^2 - xy z + (x^2 + y^2 - 2 + 2cosh(beta/2)) = 0,
// returned in increasing order. The two roots are the two twist-sign
// choices for the third trace. Throws NoRealSolution if the discriminant
// is negative.
std::pair<Real, Real> solve_third_trace(Real x, Real y, Real beta);

// The three Markov neighbors (x, y, xy-z), (x, xz-y, z), (yz-x, y, z).
// Throws DomainError when a neighbor coordinate drops to 2 or below
// (that move leaves the valid cone).
std::array<TraceTriple, 3> markov_neighbors(const TraceTriple& t);

// Greedily applies Markov moves that strictly decrease the maximum
// coordinate until none does. The result is the root triple of the move
// tree; its minimum coordinate carries the systole.
TraceTriple reduce_to_minimal(const TraceTriple& t);

// The unique x = y = z piece at boundary length beta, with x the root > 3
// of x^3 - 3x^2 = 2 cosh(beta/2) - 2 (safeguarded Newton). This piece
// maximizes the interior systole among all pieces with that boundary.
TorusPiece maximal_torus(Real beta);

// Simultaneous solve of the maximal-torus relation with h_sigma = beta/2.
struct Extremal11 {
    Real sigma;  // interior systole, 2 arccosh((3+sqrt(17))/4)
    Real beta;   // boundary length, 2 arccosh((5+sqrt(17))/2)
    Real h;      // height of the systole, = beta/2
    Certificate certificate;
};

Extremal11 extremal_11();

}  // namespace hypinvol::fricke
