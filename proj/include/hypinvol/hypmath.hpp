#pragma once

#include <cstdint>

#include "hypinvol/errors.hpp"

// Scalar hyperbolic trigonometry kernel: safe inverse hyperbolic functions,
// right-angled pentagon/hexagon relations, pants perpendiculars, collar
// widths and Gauss-Bonnet areas. Everything here is pure and stateless.
//
// All relations are written in terms of cosh/sinh of HALF lengths so that
// lengths up to ~1400 stay inside double range.

namespace hypinvol::hypmath {

using Real = double;

// Residual / clamping tolerances threaded through the numeric kernels.
struct Tol {
    Real abs_res = 1e-9;      // residual tolerance for consistency checks
    Real domain_eps = 1e-12;  // clamping window at domain boundaries

    void validate() const {
        if (!(0.0 < domain_eps && domain_eps <= abs_res && abs_res < 1.0))
            throw DomainError("Tol: need 0 < domain_eps <= abs_res < 1");
    }
};

// Signature (g, n) of a hyperbolic surface with geodesic boundary.
struct Signature {
    int genus = 0;
    int boundary_count = 0;

    Signature(int g, int n) : genus(g), boundary_count(n) {
        if (g < 0 || n < 0) throw DomainError("Signature: negative entries");
        const bool ok = (n == 0) ? (g >= 2)
                      : (g == 0) ? (n >= 3)
                                 : true;  // g >= 1, n >= 1
        if (!ok) throw DomainError("Signature: no hyperbolic structure on this (g,n)");
    }

    int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }
};

// area(S) = -2*pi*chi(S) = 2*pi*(2g - 2 + n).
Real area(const Signature& sig);

// arccosh with a clamping window: values within domain_eps below 1 are
// treated as 1 (rounding noise); anything farther below is inconsistent
// geometry and throws DomainError.
Real acosh_checked(Real v, const Tol& tol = Tol{});

// Collar half-width of a simple closed geodesic of length len:
// w = arcsinh(1/sinh(len/2)). Strictly decreasing, unbounded as len -> 0.
Real collar_width(Real len);

// Side of a right-angled pentagon not adjacent to either of the adjacent
// sides a, b: cosh(c) = sinh(a) sinh(b). Throws DegenerateError when no
// such pentagon exists (sinh(a) sinh(b) <= 1).
Real pentagon_opposite(Real a, Real b, const Tol& tol = Tol{});

// Side opposite m in a right-angled hexagon whose sides adjacent to m are
// a and b: cosh(c) = sinh(a) sinh(b) cosh(m) - cosh(a) cosh(b).
Real hexagon_opposite(Real a, Real m, Real b);

// Perpendicular between the cuffs of lengths li and lj in a pair of pants
// with cuff lengths (li, lj, lk).
Real pants_perp(Real li, Real lj, Real lk);

// Length of the height associated to an interior simple closed geodesic of
// length gamma in a one-holed torus with boundary length beta: the unique
// simple boundary-to-boundary perpendicular disjoint from gamma. Cutting
// along gamma leaves a pair of pants (beta, gamma, gamma), which is rigid,
// so the height depends only on (gamma, beta):
//   sinh(h/2) * sinh(beta/4) = cosh(gamma/2).
Real height_from_geodesic(Real gamma, Real beta);

// Certified lower bound on the involution displacement of the glued
// two-piece constructions: twice the collar width of the glued curves,
// 2*arcsinh(1/sinh(x/2)). Unbounded as x -> 0.
Real displacement_lower_bound_glued(Real x);

// arccosh((5+sqrt(17))/2), the sharp genus-2 displacement bound. Computed
// from the radical at first use, never hard-coded as a decimal.
Real sharp_genus2_bound();

}  // namespace hypinvol::hypmath
