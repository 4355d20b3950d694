#include "hypinvol/fricke.hpp"

#include <algorithm>
#include <cmath>

namespace hypinvol::fricke {

namespace {

// Safeguarded Newton: bisection fallback keeps the iterate bracketed.
template <typename F, typename DF>
Real newton_bracketed(F f, DF df, Real lo, Real hi, Real x0, Real res_tol, int max_iter = 200) {
    Real flo = f(lo);
    Real fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw NoRealSolution("newton_bracketed: root not bracketed");
    Real x = std::clamp(x0, lo, hi);
    for (int it = 0; it < max_iter; ++it) {
        const Real fx = f(x);
        if (std::fabs(fx) <= res_tol) return x;
        if (fx * flo < 0.0) { hi = x; } else { lo = x; flo = fx; }
        const Real d = df(x);
        Real next = (d != 0.0) ? x - fx / d : lo;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) return x;
        x = next;
    }
    return x;
}

// Tolerance for trace-identity residuals: absolute at desk scale, with a
// representability allowance once cosh(beta/2) dwarfs the 1e-8 budget.
Real residual_tolerance(Real beta) {
    return 1e-8 + 1e-12 * std::fabs(2.0 - 2.0 * std::cosh(beta / 2.0));
}

}  // namespace

Real fricke_residual(const TraceTriple& t, Real beta) {
    const Real x = t.x, y = t.y, z = t.z;
    return x * x + y * y + z * z - x * y * z - (2.0 - 2.0 * std::cosh(beta / 2.0));
}

TorusPiece::TorusPiece(Real beta_, const TraceTriple& t) : beta(beta_), traces(t) {
    if (!(beta > 0.0)) throw GluingError("TorusPiece: boundary length must be positive");
    const Real res = fricke_residual(traces, beta);
    if (std::fabs(res) > residual_tolerance(beta))
        throw GluingError("TorusPiece: trace triple inconsistent with boundary length");
}

Real TorusPiece::systole() const {
    const TraceTriple reduced = reduce_to_minimal(traces);
    return 2.0 * std::acosh(reduced.min_coord() / 2.0);
}

std::pair<Real, Real> solve_third_trace(Real x, Real y, Real beta) {
    if (beta < 0.0) throw DomainError("solve_third_trace: beta must be nonnegative");
    const Real xy = x * y;
    const Real c = x * x + y * y - 2.0 + 2.0 * std::cosh(beta / 2.0);
    const Real disc = xy * xy - 4.0 * c;
    if (disc < 0.0)
        throw NoRealSolution("solve_third_trace: incompatible (x, y, beta)");
    const Real root = std::sqrt(disc);
    // Evaluate the larger root directly, recover the smaller one from Vieta
    // to avoid cancellation.
    const Real z_hi = 0.5 * (xy + root);
    const Real z_lo = (z_hi != 0.0) ? c / z_hi : 0.5 * (xy - root);
    return {z_lo, z_hi};
}

std::array<TraceTriple, 3> markov_neighbors(const TraceTriple& t) {
    return {TraceTriple(t.x, t.y, t.x * t.y - t.z),
            TraceTriple(t.x, t.x * t.z - t.y, t.z),
            TraceTriple(t.y * t.z - t.x, t.y, t.z)};
}

TraceTriple reduce_to_minimal(const TraceTriple& t) {
    TraceTriple cur = t;
    for (long step = 0; step < 1000000; ++step) {
        const Real cur_max = cur.max_coord();
        // Flipping any coordinate other than the maximum cannot shrink the
        // maximum, so only the three direct flips need checking.
        const Real cand[3] = {cur.x * cur.y - cur.z, cur.x * cur.z - cur.y,
                              cur.y * cur.z - cur.x};
        int best = -1;
        Real best_max = cur_max;
        for (int i = 0; i < 3; ++i) {
            if (cand[i] <= 2.0) continue;
            TraceTriple n = (i == 0) ? TraceTriple(cur.x, cur.y, cand[0])
                          : (i == 1) ? TraceTriple(cur.x, cand[1], cur.z)
                                     : TraceTriple(cand[2], cur.y, cur.z);
            const Real m = n.max_coord();
            if (m < best_max) {
                best_max = m;
                best = i;
            }
        }
        if (best < 0) return cur;
        cur = (best == 0) ? TraceTriple(cur.x, cur.y, cand[0])
            : (best == 1) ? TraceTriple(cur.x, cand[1], cur.z)
                          : TraceTriple(cand[2], cur.y, cur.z);
    }
    throw NonTermination("reduce_to_minimal: move budget exhausted, invalid data");
}

TorusPiece maximal_torus(Real beta) {
    if (!(beta > 0.0)) throw DomainError("maximal_torus: beta must be positive");
    const Real rhs = 2.0 * std::cosh(beta / 2.0) - 2.0;
    const Real t = std::cbrt(2.0 * std::cosh(beta / 2.0));
    auto f = [rhs](Real x) { return x * x * (x - 3.0) - rhs; };
    auto df = [](Real x) { return 3.0 * x * x - 6.0 * x; };
    const Real x = newton_bracketed(f, df, 3.0, 3.0 + 2.0 * t, 3.0 + t,
                                    1e-13 + 1e-15 * rhs);
    return TorusPiece(beta, TraceTriple(x, x, x));
}

Extremal11 extremal_11() {
    // Solve h_sigma(beta) = beta/2 where sigma is the maximal-torus systole
    // at boundary beta. The mismatch is strictly decreasing across the root.
    auto mismatch = [](Real beta) {
        const TorusPiece piece = maximal_torus(beta);
        const Real sigma = piece.systole();
        return hypmath::height_from_geodesic(sigma, beta) - beta / 2.0;
    };
    Real lo = 1.0, hi = 10.0;
    Real beta = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const Real m = mismatch(beta);
        if (std::fabs(m) < 1e-14) break;
        if (m > 0.0) lo = beta; else hi = beta;
        beta = 0.5 * (lo + hi);
        if (hi - lo < 1e-15 * beta) break;
    }

    const TorusPiece piece = maximal_torus(beta);
    const Real sigma = piece.systole();
    const Real h = hypmath::height_from_geodesic(sigma, beta);
    const Real c = std::cosh(sigma / 2.0);
    const Real cb = std::cosh(beta / 2.0);
    const Real sb4 = std::sinh(beta / 4.0);

    Certificate cert;
    cert.claim_id = "extremal-genus2-piece";
    cert.tolerance = 1e-9;
    cert.values = {
        {"sigma", sigma},
        {"beta", beta},
        {"h_sigma", h},
        {"cosh_half_sigma", c},
        {"cosh_half_beta", cb},
        {"cubic_printed_variant_residual",
         4.0 * c * c * c + 6.0 * c * c + 1.0 - cb},
        {"sharp_bound", hypmath::sharp_genus2_bound()},
    };
    cert.residuals = {
        {"boundary_vs_trace_identity", fricke_residual(piece.traces, beta)},
        {"cubic_minus_variant", 4.0 * c * c * c - 6.0 * c * c + 1.0 - cb},
        {"height_equals_half_beta", h - beta / 2.0},
        {"linear_relation", (cb - 1.0) - 2.0 * c},
        {"pentagon_relation", sb4 * sb4 - c},
        {"quadratic_relation", 2.0 * c * c - 3.0 * c - 1.0},
        {"sigma_vs_radical", sigma - 2.0 * std::acosh((3.0 + std::sqrt(17.0)) / 4.0)},
        {"h_vs_radical", h - hypmath::sharp_genus2_bound()},
    };
    cert.caveats = {
        "cubic_printed_variant_residual records the + sign variant of the "
        "cubic boundary relation; it is inconsistent with the linear and "
        "quadratic relations and with the trace identity, so it is reported "
        "as a value, not enforced."};
    return Extremal11{sigma, beta, h, cert};
}

}  // namespace hypinvol::fricke
