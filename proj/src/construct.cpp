#include "hypinvol/construct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace hypinvol::construct {

// ---------------------------------------------------------------------
// CellComplex

int CellComplex::add_cell(CellKind kind, std::string label) {
    const int id = static_cast<int>(kind_.size());
    kind_.push_back(kind);
    label_.push_back(std::move(label));
    parent_.push_back(id);
    return id;
}

int CellComplex::representative(int id) const {
    while (parent_[id] != id) id = parent_[id] = parent_[parent_[id]];
    return id;
}

void CellComplex::glue(int a, int b) {
    if (kind_[a] != kind_[b]) throw GluingError("CellComplex: kind mismatch in gluing");
    parent_[representative(a)] = representative(b);
}

int CellComplex::count_classes(CellKind k) const {
    int n = 0;
    for (int i = 0; i < cell_count(); ++i)
        if (kind_[i] == k && representative(i) == i) ++n;
    return n;
}

int CellComplex::vertex_classes() const { return count_classes(CellKind::vertex); }
int CellComplex::edge_classes() const { return count_classes(CellKind::edge); }
int CellComplex::face_classes() const { return count_classes(CellKind::face); }

int CellComplex::euler_characteristic() const {
    return vertex_classes() - edge_classes() + face_classes();
}

std::vector<std::string> CellComplex::fixed_classes(const std::vector<int>& cell_map) const {
    if (static_cast<int>(cell_map.size()) != cell_count())
        throw GluingError("CellComplex: cell map size mismatch");
    // The map must be an involution descending to identified classes.
    std::map<int, int> class_image;
    for (int i = 0; i < cell_count(); ++i) {
        const int img = cell_map[i];
        if (img < 0 || img >= cell_count() || kind_[img] != kind_[i] ||
            cell_map[img] != i)
            throw GluingError("CellComplex: cell map is not an involution");
        const int src = representative(i);
        const int dst = representative(img);
        auto [it, inserted] = class_image.emplace(src, dst);
        if (!inserted && it->second != dst)
            throw GluingError("CellComplex: involution does not respect the pasting");
    }
    std::vector<std::string> fixed;
    for (const auto& [src, dst] : class_image)
        if (src == dst) fixed.push_back(label_[src]);
    return fixed;
}

// ---------------------------------------------------------------------
// Generic two-piece gluings

Real solve_x_for_k(Real k, Real safety) {
    if (!(k > 0.0)) throw DomainError("solve_x_for_k: k must be positive");
    if (!(safety > 0.0 && safety < 1.0))
        throw DomainError("solve_x_for_k: safety must lie in (0,1)");
    return safety * 2.0 * std::asinh(1.0 / std::sinh(k / 2.0));
}

namespace {

// Cell ids of one (g_tilde, 2) piece with marked boundaries.
struct PieceCells {
    int v0, pA, qA, pB, qB;
    std::vector<int> handles;
    int sA, sB;
    int aPQ, aQP, bPQ, bQP;
    int face;
};

PieceCells add_piece(CellComplex& cx, int g_tilde, const std::string& tag) {
    PieceCells p;
    p.v0 = cx.add_cell(CellKind::vertex, tag + ".v0");
    p.pA = cx.add_cell(CellKind::vertex, tag + ".pA");
    p.qA = cx.add_cell(CellKind::vertex, tag + ".qA");
    p.pB = cx.add_cell(CellKind::vertex, tag + ".pB");
    p.qB = cx.add_cell(CellKind::vertex, tag + ".qB");
    for (int i = 0; i < 2 * g_tilde; ++i)
        p.handles.push_back(cx.add_cell(CellKind::edge, tag + ".h" + std::to_string(i)));
    p.sA = cx.add_cell(CellKind::edge, tag + ".sA");
    p.sB = cx.add_cell(CellKind::edge, tag + ".sB");
    p.aPQ = cx.add_cell(CellKind::edge, tag + ".aPQ");
    p.aQP = cx.add_cell(CellKind::edge, tag + ".aQP");
    p.bPQ = cx.add_cell(CellKind::edge, tag + ".bPQ");
    p.bQP = cx.add_cell(CellKind::edge, tag + ".bQP");
    p.face = cx.add_cell(CellKind::face, tag + ".f");
    return p;
}

std::vector<int> swap_map(const PieceCells& a, const PieceCells& b, int n_cells) {
    std::vector<int> map(n_cells, -1);
    auto pair = [&](int x, int y) {
        map[x] = y;
        map[y] = x;
    };
    pair(a.v0, b.v0);
    pair(a.pA, b.pA);
    pair(a.qA, b.qA);
    pair(a.pB, b.pB);
    pair(a.qB, b.qB);
    for (size_t i = 0; i < a.handles.size(); ++i) pair(a.handles[i], b.handles[i]);
    pair(a.sA, b.sA);
    pair(a.sB, b.sB);
    pair(a.aPQ, b.aPQ);
    pair(a.aQP, b.aQP);
    pair(a.bPQ, b.bPQ);
    pair(a.bQP, b.bQP);
    pair(a.face, b.face);
    return map;
}

}  // namespace

OddGenusSurface build_odd_genus(int g_tilde, Real x, Flavor flavor) {
    if (g_tilde < 1) throw InvalidGenus("build_odd_genus: need g_tilde >= 1");
    if (!(x > 0.0)) throw DomainError("build_odd_genus: boundary length must be positive");
    if (flavor == Flavor::hyperelliptic_polygon)
        throw DomainError("build_odd_genus: use build_hyperelliptic_example for that flavor");

    CellComplex cx;
    const PieceCells s1 = add_piece(cx, g_tilde, "S1");
    const PieceCells s2 = add_piece(cx, g_tilde, "S2");

    if (flavor == Flavor::preserving) {
        // S1.alpha to S2.beta and S2.alpha to S1.beta, marked p to p.
        cx.glue(s1.aPQ, s2.bPQ);
        cx.glue(s1.aQP, s2.bQP);
        cx.glue(s1.pA, s2.pB);
        cx.glue(s1.qA, s2.qB);
        cx.glue(s2.aPQ, s1.bPQ);
        cx.glue(s2.aQP, s1.bQP);
        cx.glue(s2.pA, s1.pB);
        cx.glue(s2.qA, s1.qB);
    } else {
        // Mirror copy: each circle glues to its image with a half-turn
        // offset, marked p to q, which is what keeps the swap free.
        cx.glue(s1.aPQ, s2.aQP);
        cx.glue(s1.aQP, s2.aPQ);
        cx.glue(s1.pA, s2.qA);
        cx.glue(s1.qA, s2.pA);
        cx.glue(s1.bPQ, s2.bQP);
        cx.glue(s1.bQP, s2.bPQ);
        cx.glue(s1.pB, s2.qB);
        cx.glue(s1.qB, s2.pB);
    }

    std::vector<int> tau = swap_map(s1, s2, cx.cell_count());
    std::vector<std::string> fixed = cx.fixed_classes(tau);

    const int genus = 2 * g_tilde + 1;
    if (cx.euler_characteristic() != 2 - 2 * genus)
        throw GluingError("build_odd_genus: Euler characteristic mismatch");

    return OddGenusSurface{
        GluingScheme{hypmath::Signature(g_tilde, 2), x, flavor},
        genus,
        flavor == Flavor::preserving ? genus2::Parity::preserving
                                     : genus2::Parity::reversing,
        std::move(cx),
        std::move(tau),
        std::move(fixed)};
}

Certificate certify_displacement(const OddGenusSurface& s, Real k) {
    const Real x = s.scheme.boundary_length;
    const Real bound = hypmath::displacement_lower_bound_glued(x);
    const Real printed = std::asinh(1.0 / std::cosh(x / 2.0));

    Certificate cert;
    cert.claim_id = "odd-genus-displacement";
    cert.tolerance = 1e-9;
    cert.values = {
        {"genus", static_cast<double>(s.genus)},
        {"boundary_length", x},
        {"collar_bound", bound},
        {"paper_printed_variant", printed},
        {"printed_variant_cap", std::asinh(1.0)},
        {"k", k},
        {"fixed_cells", static_cast<double>(s.fixed_cells.size())},
    };
    cert.residuals = {
        {"bound_exceeds_k", std::max(0.0, k - bound)},
        {"fixed_cell_count", static_cast<double>(s.fixed_cells.size())},
        {"euler_characteristic",
         static_cast<double>(s.complex.euler_characteristic() - (2 - 2 * s.genus))},
    };
    cert.caveats = {
        "paper_printed_variant arcsinh(1/cosh(x/2)) is bounded above by "
        "arcsinh(1) and cannot certify large separation; the certified "
        "bound is twice the collar width of the glued curves."};
    return cert;
}

// ---------------------------------------------------------------------
// Polygon solver

namespace {

using halfplane::compose;
using halfplane::invert;

Isometry step(const Isometry& g, Real side) {
    return compose(compose(g, Isometry::axis_translation(side)),
                   Isometry::rotation_about_i(-M_PI / 2.0));
}

Real closure_gap(const Isometry& h) {
    const Real dp = std::max(std::max(std::fabs(h.a - 1.0), std::fabs(h.b)),
                             std::max(std::fabs(h.c), std::fabs(h.d - 1.0)));
    const Real dm = std::max(std::max(std::fabs(h.a + 1.0), std::fabs(h.b)),
                             std::max(std::fabs(h.c), std::fabs(h.d + 1.0)));
    return std::min(dp, dm);
}

std::array<Real, 3> closure_residual_vec(const std::vector<Real>& sides) {
    Isometry h = Isometry::identity();
    for (Real s : sides) h = step(h, s);
    return {h.b, h.c, h.a - h.d};
}

bool solve3(const std::array<std::array<Real, 3>, 3>& m, const std::array<Real, 3>& r,
            std::array<Real, 3>& out) {
    const Real det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::fabs(det) < 1e-300) return false;
    std::array<std::array<Real, 3>, 3> t;
    for (int col = 0; col < 3; ++col) {
        t = m;
        for (int row = 0; row < 3; ++row) t[row][col] = r[row];
        out[col] = (t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
                    t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
                    t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0])) /
                   det;
    }
    return true;
}

Real norm_inf(const std::array<Real, 3>& v) {
    return std::max(std::fabs(v[0]), std::max(std::fabs(v[1]), std::fabs(v[2])));
}

}  // namespace

PolygonSpec solve_right_angled_polygon(const std::vector<std::optional<Real>>& spec) {
    const int n = static_cast<int>(spec.size());
    if (n < 5) throw DomainError("solve_right_angled_polygon: need at least 5 sides");
    std::vector<int> unknown;
    Real prescribed_sum = 0.0;
    int prescribed_count = 0;
    for (int i = 0; i < n; ++i) {
        if (spec[i].has_value()) {
            if (!(*spec[i] > 0.0))
                throw DomainError("solve_right_angled_polygon: sides must be positive");
            prescribed_sum += *spec[i];
            ++prescribed_count;
        } else {
            unknown.push_back(i);
        }
    }
    if (prescribed_count != n - 3)
        throw DomainError("solve_right_angled_polygon: exactly n-3 sides must be prescribed");

    const Real base_guess =
        std::clamp(prescribed_sum / std::max(1, prescribed_count), 0.7, 2.0);

    std::vector<Real> sides(n, 0.0);
    for (int i = 0; i < n; ++i)
        if (spec[i]) sides[i] = *spec[i];

    auto residual = [&](const std::array<Real, 3>& u) {
        for (int j = 0; j < 3; ++j) sides[unknown[j]] = u[j];
        return closure_residual_vec(sides);
    };

    const Real restarts[8] = {0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0};
    bool solved = false;
    for (Real scale : restarts) {
        std::array<Real, 3> u{scale * base_guess, scale * base_guess, scale * base_guess};
        bool converged = false;
        for (int iter = 0; iter < 120; ++iter) {
            const std::array<Real, 3> r = residual(u);
            if (norm_inf(r) < 1e-12) {
                converged = true;
                break;
            }
            std::array<std::array<Real, 3>, 3> jac;
            bool jac_ok = true;
            for (int j = 0; j < 3; ++j) {
                const Real h = 1e-7 * std::max(1.0, std::fabs(u[j]));
                std::array<Real, 3> up = u;
                up[j] += h;
                const std::array<Real, 3> rp = residual(up);
                for (int k = 0; k < 3; ++k) jac[k][j] = (rp[k] - r[k]) / h;
            }
            std::array<Real, 3> du{};
            if (!solve3(jac, r, du)) {
                jac_ok = false;
            }
            if (!jac_ok) break;
            // Damped step, kept inside a bounded positive cone.
            bool stepped = false;
            for (Real lambda = 1.0; lambda > 1e-6; lambda *= 0.5) {
                std::array<Real, 3> next;
                bool inside = true;
                for (int j = 0; j < 3; ++j) {
                    next[j] = u[j] - lambda * du[j];
                    if (!(next[j] > 1e-8 && next[j] < 50.0)) inside = false;
                }
                if (!inside) continue;
                if (norm_inf(residual(next)) < norm_inf(r)) {
                    u = next;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) break;
        }
        if (converged) {
            for (int j = 0; j < 3; ++j) sides[unknown[j]] = u[j];
            solved = true;
            break;
        }
    }
    if (!solved)
        throw NoSolution("solve_right_angled_polygon: shooting failed from all restarts");

    PolygonSpec out;
    out.sides = sides;
    Isometry g = Isometry::identity();
    for (int i = 0; i < n; ++i) {
        g = compose(g, Isometry::axis_translation(sides[i]));
        out.vertices.push_back(halfplane::apply(g, HPoint(0.0, 1.0)));
        g = compose(g, Isometry::rotation_about_i(-M_PI / 2.0));
    }
    out.closure_residual = closure_gap(g);

    // Re-measure the corner angles from the vertex coordinates alone.
    Real worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const HPoint& prev = out.vertices[(i + n - 1) % n];
        const HPoint& cur = out.vertices[i];
        const HPoint& next = out.vertices[(i + 1) % n];
        const Real b = halfplane::dist(prev, cur);
        const Real c = halfplane::dist(cur, next);
        const Real a = halfplane::dist(prev, next);
        const Real cosangle = (std::cosh(b) * std::cosh(c) - std::cosh(a)) /
                              (std::sinh(b) * std::sinh(c));
        worst = std::max(worst, std::fabs(cosangle));
    }
    out.max_angle_residual = worst;
    if (out.closure_residual > 1e-8 || out.max_angle_residual > 1e-8)
        throw NoSolution("solve_right_angled_polygon: converged point fails validation");
    return out;
}

std::string polygon_to_svg(const PolygonSpec& poly) {
    // Geodesic sides sampled as polylines in half-plane coordinates.
    std::ostringstream os;
    Real min_x = 1e300, max_x = -1e300, max_y = 0.0;
    for (const auto& v : poly.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        max_y = std::max(max_y, v.y);
    }
    const Real pad = 0.1 * std::max(max_x - min_x, max_y);
    const Real scale = 560.0 / std::max(max_x - min_x + 2 * pad, max_y + pad);
    auto X = [&](Real x) { return (x - min_x + pad) * scale + 20.0; };
    auto Y = [&](Real y) { return 580.0 - y * scale; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\">\n";
    const int n = static_cast<int>(poly.vertices.size());
    for (int i = 0; i < n; ++i) {
        const HPoint& a = poly.vertices[i];
        const HPoint& b = poly.vertices[(i + 1) % n];
        os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
        // Geodesic arc between a and b: circle orthogonal to the real axis.
        const Real dx = b.x - a.x;
        if (std::fabs(dx) < 1e-12) {
            os << X(a.x) << "," << Y(a.y) << " " << X(b.x) << "," << Y(b.y);
        } else {
            const Real cx =
                (b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y) / (2.0 * dx);
            const Real r = std::hypot(a.x - cx, a.y);
            const Real t0 = std::atan2(a.y, a.x - cx);
            const Real t1 = std::atan2(b.y, b.x - cx);
            for (int k = 0; k <= 24; ++k) {
                const Real t = t0 + (t1 - t0) * k / 24.0;
                os << X(cx + r * std::cos(t)) << "," << Y(r * std::sin(t)) << " ";
            }
        }
        os << "\"/>\n";
    }
    for (const auto& v : poly.vertices)
        os << "<circle cx=\"" << X(v.x) << "\" cy=\"" << Y(v.y)
           << "\" r=\"2.5\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------
// Hyperelliptic polygon example

namespace {

// Polygon copies in gluing order: direct copies P1, Q1 and mirrors P2, Q2
// in the top surface, then their mirror images in the bottom one.
enum Poly : int { P1, P2, Q1, Q2, P1m, P2m, Q1m, Q2m };

const char* poly_name(int p) {
    static const char* names[8] = {"P1", "P2", "Q1", "Q2", "P1-", "P2-", "Q1-", "Q2-"};
    return names[p];
}

struct PolyCells {
    std::vector<int> a, b;        // edges a_i, b_i (1-based stored at i-1)
    std::vector<int> cAB, cBA;    // corners (a_i, b_i) and (b_i, a_{i+1})
    int face;
};

}  // namespace

HyperellipticExample build_hyperelliptic_example(int g_tilde, Real a1) {
    if (g_tilde < 1) throw InvalidGenus("build_hyperelliptic_example: need g_tilde >= 1");
    if (!(a1 > 0.0)) throw DomainError("build_hyperelliptic_example: a1 must be positive");
    const int m = g_tilde + 2;  // a- and b-side count; the polygon has 2m sides

    // Solve the polygon: a_1 prescribed, the other prescribed sides pinned
    // at the regular right-angled 2m-gon value (a feasible interior point
    // of the moduli space). The shooting variables are b_1, b_{m-1} and
    // b_m, so both neighbors of the short a_1 side stay free.
    const int n_sides = 2 * m;
    const Real regular =
        2.0 * std::acosh(std::sqrt(2.0) * std::cos(M_PI / n_sides));
    std::vector<std::optional<Real>> spec(n_sides);
    spec[0] = a1;
    for (int i = 1; i < m; ++i) spec[2 * i] = regular;
    for (int i = 2; i <= m - 2; ++i) spec[2 * (i - 1) + 1] = regular;  // b_2 .. b_{m-2}
    const PolygonSpec polygon = solve_right_angled_polygon(spec);

    // Cell complex on eight copies.
    CellComplex cx;
    std::array<PolyCells, 8> pc;
    for (int p = 0; p < 8; ++p) {
        const std::string tag = poly_name(p);
        for (int i = 1; i <= m; ++i) {
            pc[p].a.push_back(cx.add_cell(CellKind::edge, tag + ".a" + std::to_string(i)));
            pc[p].b.push_back(cx.add_cell(CellKind::edge, tag + ".b" + std::to_string(i)));
        }
        for (int i = 1; i <= m; ++i) {
            pc[p].cAB.push_back(
                cx.add_cell(CellKind::vertex, tag + ".c_a" + std::to_string(i) + "b"));
            pc[p].cBA.push_back(
                cx.add_cell(CellKind::vertex, tag + ".c_b" + std::to_string(i) + "a"));
        }
        pc[p].face = cx.add_cell(CellKind::face, tag + ".f");
    }

    // Glue side a_i of X to a_i of Y together with the adjacent corners
    // (label-respecting: mirror copies carry the same labels).
    auto glue_a = [&](int X, int Y, int i) {
        cx.glue(pc[X].a[i - 1], pc[Y].a[i - 1]);
        cx.glue(pc[X].cAB[i - 1], pc[Y].cAB[i - 1]);
        const int prev = (i - 2 + m) % m;  // corner (b_{i-1}, a_i)
        cx.glue(pc[X].cBA[prev], pc[Y].cBA[prev]);
    };
    auto glue_b = [&](int X, int Y, int i) {
        cx.glue(pc[X].b[i - 1], pc[Y].b[i - 1]);
        cx.glue(pc[X].cAB[i - 1], pc[Y].cAB[i - 1]);
        cx.glue(pc[X].cBA[i - 1], pc[Y].cBA[i - 1]);
    };

    // a_1 joins the P-side to the Q-side; the other a_i stay inside each
    // side; every b_i joins a polygon to its bottom image.
    glue_a(P1, Q2, 1);
    glue_a(P2, Q1, 1);
    glue_a(P1m, Q2m, 1);
    glue_a(P2m, Q1m, 1);
    for (int i = 2; i <= m; ++i) {
        glue_a(P1, P2, i);
        glue_a(Q1, Q2, i);
        glue_a(P1m, P2m, i);
        glue_a(Q1m, Q2m, i);
    }
    for (int i = 1; i <= m; ++i) {
        glue_b(P1, P1m, i);
        glue_b(P2, P2m, i);
        glue_b(Q1, Q1m, i);
        glue_b(Q2, Q2m, i);
    }

    const int genus = 2 * g_tilde + 1;
    if (cx.euler_characteristic() != 2 - 2 * genus)
        throw GluingError("build_hyperelliptic_example: Euler characteristic mismatch");

    // Involutions as polygon permutations.
    auto perm_map = [&](const std::array<int, 8>& perm) {
        std::vector<int> map(cx.cell_count(), -1);
        for (int p = 0; p < 8; ++p) {
            const int q = perm[p];
            for (int i = 0; i < m; ++i) {
                map[pc[p].a[i]] = pc[q].a[i];
                map[pc[p].b[i]] = pc[q].b[i];
                map[pc[p].cAB[i]] = pc[q].cAB[i];
                map[pc[p].cBA[i]] = pc[q].cBA[i];
            }
            map[pc[p].face] = pc[q].face;
        }
        return map;
    };

    const std::array<int, 8> tau_o_perm = {Q1, Q2, P1, P2, Q1m, Q2m, P1m, P2m};
    const std::array<int, 8> tau_r_perm = {Q1m, Q2m, P1m, P2m, Q1, Q2, P1, P2};
    const std::array<int, 8> tau_h_perm = {P2m, P1m, Q2m, Q1m, P2, P1, Q2, Q1};

    const std::vector<int> tau_o = perm_map(tau_o_perm);
    const std::vector<int> tau_r = perm_map(tau_r_perm);
    const std::vector<int> tau_h = perm_map(tau_h_perm);

    const std::vector<std::string> fixed_o = cx.fixed_classes(tau_o);
    const std::vector<std::string> fixed_r = cx.fixed_classes(tau_r);
    const std::vector<std::string> fixed_h = cx.fixed_classes(tau_h);

    // The a_1 images: four glued edges; count the closed curves they form
    // by joining edges that share an endpoint class.
    const std::array<int, 4> a1_polys{P1, P2, P1m, P2m};
    std::array<int, 4> comp{0, 1, 2, 3};
    auto endpoints = [&](int p) {
        return std::array<int, 2>{cx.representative(pc[p].cAB[0]),
                                  cx.representative(pc[p].cBA[m - 1])};
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (comp[i] == comp[j]) continue;
                const bool same_edge = cx.representative(pc[a1_polys[i]].a[0]) ==
                                       cx.representative(pc[a1_polys[j]].a[0]);
                const auto vi = endpoints(a1_polys[i]);
                const auto vj = endpoints(a1_polys[j]);
                if (same_edge || vi[0] == vj[0] || vi[0] == vj[1] || vi[1] == vj[0] ||
                    vi[1] == vj[1]) {
                    const int lo = std::min(comp[i], comp[j]);
                    const int hi = std::max(comp[i], comp[j]);
                    for (int& c : comp)
                        if (c == hi) c = lo;
                    changed = true;
                }
            }
        }
    }
    std::array<int, 4> uniq = comp;
    std::sort(uniq.begin(), uniq.end());
    const int curve_count =
        static_cast<int>(std::unique(uniq.begin(), uniq.end()) - uniq.begin());
    const Real curve_length = (4.0 / std::max(1, curve_count)) * a1;

    GluingScheme scheme{hypmath::Signature(g_tilde, 2), curve_length,
                        Flavor::hyperelliptic_polygon};

    OddGenusSurface preserving{scheme, genus, genus2::Parity::preserving, cx, tau_o,
                               fixed_o};
    OddGenusSurface reversing{scheme, genus, genus2::Parity::reversing, cx, tau_r,
                              fixed_r};

    Certificate cert;
    cert.claim_id = "hyperelliptic-example";
    cert.tolerance = 1e-8;
    cert.values = {
        {"genus", static_cast<double>(genus)},
        {"polygon_sides", static_cast<double>(2 * m)},
        {"a1", a1},
        {"a1_curve_count", static_cast<double>(curve_count)},
        {"a1_curve_length", curve_length},
        {"collar_bound", hypmath::displacement_lower_bound_glued(curve_length)},
        {"hyperelliptic_fixed_vertices", static_cast<double>(fixed_h.size())},
        {"closure_residual", polygon.closure_residual},
        {"max_angle_residual", polygon.max_angle_residual},
    };
    cert.residuals = {
        {"tau_o_fixed_cells", static_cast<double>(fixed_o.size())},
        {"tau_r_fixed_cells", static_cast<double>(fixed_r.size())},
        {"tau_h_fixed_count_vs_2g_plus_2",
         static_cast<double>(fixed_h.size()) - (2.0 * genus + 2.0)},
        {"euler_characteristic",
         static_cast<double>(cx.euler_characteristic() - (2 - 2 * genus))},
        {"polygon_closure", polygon.closure_residual},
        {"polygon_angles", polygon.max_angle_residual},
    };
    cert.caveats = {
        "a1_curve_length is measured combinatorially: the eight polygon "
        "copies of a1 identify pairwise into four edges forming "
        "a1_curve_count closed geodesics.",
        "hyperelliptic fixed points all sit at endpoints of pasted a_i "
        "edges, i >= 2."};

    HyperellipticExample out{std::move(preserving),
                             std::move(reversing),
                             polygon,
                             static_cast<int>(fixed_h.size()),
                             fixed_h,
                             curve_count,
                             curve_length,
                             std::move(cert)};
    return out;
}

// ---------------------------------------------------------------------
// Half-plane realization of the preserving genus-3 double

Genus3Realization realize_genus3_preserving(Real x) {
    if (!(x > 0.0)) throw DomainError("realize_genus3_preserving: x must be positive");
    const Real xt = 2.0 * std::cosh(x / 2.0);
    // Partner trace chosen so the boundary relation closes with margin.
    const Real y = std::sqrt(1.5 * (xt * xt + 0.1) / (xt - 2.0));
    const Real cosh_half_beta = 1.0 - xt * xt / 2.0 + (xt - 2.0) * y * y / 2.0;
    const Real beta = 2.0 * std::acosh(cosh_half_beta);
    const fricke::TorusPiece piece(beta, fricke::TraceTriple(xt, y, y));
    const auto gens = halfplane::genus2_generators(piece, piece, beta, 0.0);
    return Genus3Realization{{gens.begin(), gens.end()}, 1, x};
}

Real deck_displacement_at(const Genus3Realization& r, const HPoint& p, int word_cutoff) {
    return halfplane::orbit_min_dist_odd_coset(p, r.quotient_gens, r.deck_index,
                                               word_cutoff);
}

// ---------------------------------------------------------------------
// JSON exports

namespace {

void emit_complex(std::ostringstream& os, const CellComplex& cx,
                  const std::vector<int>& involution,
                  const std::vector<std::string>& fixed) {
    os << "{\"cells\":{\"edges\":" << cx.edge_classes()
       << ",\"faces\":" << cx.face_classes() << ",\"vertices\":" << cx.vertex_classes()
       << "},\"euler_characteristic\":" << cx.euler_characteristic();
    os << ",\"fixed_cells\":[";
    for (size_t i = 0; i < fixed.size(); ++i) {
        if (i) os << ",";
        os << "\"" << json_escape(fixed[i]) << "\"";
    }
    os << "],\"involution\":[";
    bool first = true;
    for (int i = 0; i < cx.cell_count(); ++i) {
        if (cx.representative(i) != i) continue;
        if (!first) os << ",";
        first = false;
        os << "[\"" << json_escape(cx.label(i)) << "\",\""
           << json_escape(cx.label(cx.representative(involution[i]))) << "\"]";
    }
    os << "]}";
}

}  // namespace

std::string OddGenusSurface::to_json() const {
    std::ostringstream os;
    os << "{\"boundary_length\":" << format_real(scheme.boundary_length);
    os << ",\"complex\":";
    emit_complex(os, complex, involution_map, fixed_cells);
    os << ",\"flavor\":\""
       << (scheme.flavor == Flavor::preserving
               ? "preserving"
               : scheme.flavor == Flavor::reversing ? "reversing"
                                                    : "hyperelliptic_polygon")
       << "\"";
    os << ",\"genus\":" << genus;
    os << ",\"involution_parity\":\""
       << (involution_parity == genus2::Parity::preserving ? "preserving" : "reversing")
       << "\"";
    os << ",\"piece_signature\":[" << scheme.piece_signature.genus << ","
       << scheme.piece_signature.boundary_count << "]";
    os << "}";
    return os.str();
}

std::string HyperellipticExample::to_json() const {
    std::ostringstream os;
    os << "{\"a1_curve_count\":" << a1_curve_count;
    os << ",\"a1_curve_length\":" << format_real(a1_curve_length);
    os << ",\"certificate\":" << certificate.to_json();
    os << ",\"hyperelliptic_fixed_vertices\":" << hyperelliptic_fixed_vertices;
    os << ",\"polygon\":{\"sides\":[";
    for (size_t i = 0; i < polygon.sides.size(); ++i) {
        if (i) os << ",";
        os << format_real(polygon.sides[i]);
    }
    os << "],\"vertices\":[";
    for (size_t i = 0; i < polygon.vertices.size(); ++i) {
        if (i) os << ",";
        os << "[" << format_real(polygon.vertices[i].x) << ","
           << format_real(polygon.vertices[i].y) << "]";
    }
    os << "],\"closure_residual\":" << format_real(polygon.closure_residual);
    os << ",\"max_angle_residual\":" << format_real(polygon.max_angle_residual) << "}";
    os << ",\"surface_preserving\":" << preserving.to_json();
    os << ",\"surface_reversing\":" << reversing.to_json();
    os << "}";
    return os.str();
}

}  // namespace hypinvol::construct
