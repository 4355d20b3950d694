#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypinvol/certificate.hpp"
#include "hypinvol/genus2.hpp"
#include "hypinvol/halfplane.hpp"
#include "hypinvol/hypmath.hpp"

// Odd-genus surfaces with fixed-point-free involutions of arbitrarily
// large displacement: generic two-piece gluings in both flavors, the
// explicit right-angled-polygon example, and certified collar-based lower
// bounds with a half-plane sampling oracle.

namespace hypinvol::construct {

using halfplane::HPoint;
using halfplane::Isometry;
using hypmath::Real;

// ---------------------------------------------------------------------
// Combinatorial cell complexes

enum class CellKind { vertex, edge, face };

// A closed surface assembled from cells with identifications, together
// with cell-level involutions. Identifications are unioned; involutions
// are validated to descend to the identified complex.
class CellComplex {
  public:
    int add_cell(CellKind kind, std::string label);
    void glue(int a, int b);

    int cell_count() const { return static_cast<int>(kind_.size()); }
    CellKind kind(int id) const { return kind_[id]; }
    const std::string& label(int id) const { return label_[id]; }
    int representative(int id) const;

    int vertex_classes() const;
    int edge_classes() const;
    int face_classes() const;
    int euler_characteristic() const;

    // Verifies the cell map descends to identified classes and returns the
    // labels of fixed classes (empty = fixed-point-free at the cell level).
    std::vector<std::string> fixed_classes(const std::vector<int>& cell_map) const;

  private:
    mutable std::vector<int> parent_;
    std::vector<CellKind> kind_;
    std::vector<std::string> label_;
    int count_classes(CellKind k) const;
};

// ---------------------------------------------------------------------
// Generic two-piece gluings

enum class Flavor { preserving, reversing, hyperelliptic_polygon };

struct GluingScheme {
    hypmath::Signature piece_signature;
    Real boundary_length;  // x, both boundary geodesics
    Flavor flavor;
};

struct OddGenusSurface {
    GluingScheme scheme;
    int genus;
    genus2::Parity involution_parity;
    CellComplex complex;
    std::vector<int> involution_map;  // cell-level action of tau
    std::vector<std::string> fixed_cells;

    std::string to_json() const;
};

// x with displacement_lower_bound_glued(x) > k, scaled inside the exact
// solution by the safety factor.
Real solve_x_for_k(Real k, Real safety = 0.99);

// Glue two (g_tilde, 2) pieces along both boundary circles of length x,
// matching diametrically opposite marked points. Preserving: the two
// circles are exchanged; reversing: each circle is glued to its mirror
// with a half-turn offset. Genus is 2 g_tilde + 1 either way.
OddGenusSurface build_odd_genus(int g_tilde, Real x, Flavor flavor);

// Collar-based displacement certificate: pass iff
// displacement_lower_bound_glued(x) > k. Also records the weaker printed
// variant arcsinh(1/cosh(x/2)), which is bounded by arcsinh(1).
Certificate certify_displacement(const OddGenusSurface& s, Real k);

// ---------------------------------------------------------------------
// Right-angled polygons

struct PolygonSpec {
    std::vector<Real> sides;                  // solved side lengths, cyclic
    std::vector<HPoint> vertices;             // realized corners
    Real closure_residual = 0.0;              // holonomy distance from +-identity
    Real max_angle_residual = 0.0;            // measured deviation from right angles
};

// Solve a right-angled n-gon from exactly n-3 prescribed side lengths by
// damped-Newton shooting on the remaining sides (8 deterministic
// restarts). Throws NoSolution when the data is infeasible.
PolygonSpec solve_right_angled_polygon(const std::vector<std::optional<Real>>& sides);

std::string polygon_to_svg(const PolygonSpec& poly);

// ---------------------------------------------------------------------
// The explicit hyperelliptic example

struct HyperellipticExample {
    OddGenusSurface preserving;  // carries tau_o
    OddGenusSurface reversing;   // carries tau_r
    PolygonSpec polygon;
    int hyperelliptic_fixed_vertices;
    std::vector<std::string> hyperelliptic_fixed_labels;
    int a1_curve_count;
    Real a1_curve_length;        // realized length of each pasted a1 curve
    Certificate certificate;

    std::string to_json() const;
};

// Assemble eight copies of a solved right-angled (2 g_tilde + 4)-gon into
// the closed surface of genus 2 g_tilde + 1 carrying the fixed-point-free
// involutions of both parities plus the hyperelliptic involution.
HyperellipticExample build_hyperelliptic_example(int g_tilde, Real a1);

// ---------------------------------------------------------------------
// Half-plane oracle for the preserving genus-3 double

// The genus-3 preserving example realized as the index-2 parity cover of
// a genus-2 quotient: the deck transformation is the coset of one handle
// generator, and the two swapped curves are the lifts of a length-x
// geodesic.
struct Genus3Realization {
    std::vector<Isometry> quotient_gens;  // A1, B1, A2, B2 downstairs
    int deck_index;                       // parity generator index (B1)
    Real curve_length;                    // x
};

Genus3Realization realize_genus3_preserving(Real x);

// d(p, tau(p)) on the cover: min over odd-parity words of the quotient
// group applied to p.
Real deck_displacement_at(const Genus3Realization& r, const HPoint& p, int word_cutoff);

}  // namespace hypinvol::construct
