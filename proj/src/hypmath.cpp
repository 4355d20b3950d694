#include "hypinvol/hypmath.hpp"

#include <cmath>

namespace hypinvol::hypmath {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_finite(Real v, const char* who) {
    if (!std::isfinite(v)) throw DomainError(std::string(who) + ": non-finite input");
}

}  // namespace

Real area(const Signature& sig) {
    return 2.0 * kPi * (2.0 * sig.genus - 2.0 + sig.boundary_count);
}

Real acosh_checked(Real v, const Tol& tol) {
    require_finite(v, "acosh_checked");
    tol.validate();
    if (v < 1.0 - tol.domain_eps)
        throw DomainError("acosh_checked: argument below 1, inconsistent geometric data");
    if (v <= 1.0) return 0.0;
    return std::acosh(v);
}

Real collar_width(Real len) {
    require_finite(len, "collar_width");
    if (len <= 0.0) throw DomainError("collar_width: length must be positive");
    return std::asinh(1.0 / std::sinh(len / 2.0));
}

Real pentagon_opposite(Real a, Real b, const Tol& tol) {
    require_finite(a, "pentagon_opposite");
    require_finite(b, "pentagon_opposite");
    tol.validate();
    if (a <= 0.0 || b <= 0.0) throw DomainError("pentagon_opposite: sides must be positive");
    const Real prod = std::sinh(a) * std::sinh(b);
    if (prod <= 1.0 + tol.domain_eps)
        throw DegenerateError("pentagon_opposite: sinh(a)sinh(b) <= 1, no right-angled pentagon");
    return std::acosh(prod);
}

Real hexagon_opposite(Real a, Real m, Real b) {
    require_finite(a, "hexagon_opposite");
    require_finite(m, "hexagon_opposite");
    require_finite(b, "hexagon_opposite");
    if (a <= 0.0 || m <= 0.0 || b <= 0.0)
        throw DomainError("hexagon_opposite: sides must be positive");
    const Real rhs = std::sinh(a) * std::sinh(b) * std::cosh(m) - std::cosh(a) * std::cosh(b);
    if (rhs <= 1.0)
        throw DegenerateError("hexagon_opposite: no right-angled hexagon with these sides");
    return std::acosh(rhs);
}

Real pants_perp(Real li, Real lj, Real lk) {
    require_finite(li, "pants_perp");
    require_finite(lj, "pants_perp");
    require_finite(lk, "pants_perp");
    if (li <= 0.0 || lj <= 0.0 || lk <= 0.0)
        throw DomainError("pants_perp: cuff lengths must be positive");
    const Real num = std::cosh(lk / 2.0) + std::cosh(li / 2.0) * std::cosh(lj / 2.0);
    return std::acosh(num / (std::sinh(li / 2.0) * std::sinh(lj / 2.0)));
}

Real height_from_geodesic(Real gamma, Real beta) {
    require_finite(gamma, "height_from_geodesic");
    require_finite(beta, "height_from_geodesic");
    if (gamma <= 0.0 || beta <= 0.0)
        throw DomainError("height_from_geodesic: lengths must be positive");
    return 2.0 * std::asinh(std::cosh(gamma / 2.0) / std::sinh(beta / 4.0));
}

Real displacement_lower_bound_glued(Real x) {
    require_finite(x, "displacement_lower_bound_glued");
    if (x <= 0.0) throw DomainError("displacement_lower_bound_glued: x must be positive");
    return 2.0 * collar_width(x);
}

Real sharp_genus2_bound() {
    static const Real bound = std::acosh((5.0 + std::sqrt(17.0)) / 2.0);
    return bound;
}

}  // namespace hypinvol::hypmath
