#pragma once

// Pattern recognition: the four facet classes in dimension 4, the exotic
// flat-border subtypes, two-dimensional B-polytope classes, and marked
// B-polygon classes with a canonical form under unimodular maps.

#include <optional>
#include <vector>

#include "bfacet/predicates.hpp"

namespace bfacet {

enum class FacetTag { B1, B2, FlatBorder, CrossPolytope, Unclassified };
enum class ExoticSubtype { Pyramid, Circuit, None };

struct B2Witness {
    std::size_t i = 0, j = 0;  // coordinate pair, 0-based, i < j
    bool degenerate = false;   // image is a proper subset of the triangle
    bool operator==(const B2Witness&) const = default;
};

struct FlatBorderWitness {
    std::size_t i = 0, j = 0;
    Point a, b, c;  // triangle: a, b with x_i = x_j = 0, c with x_i = x_j = 1
    bool operator==(const FlatBorderWitness&) const = default;
};

struct FacetClass {
    FacetTag tag = FacetTag::Unclassified;
    std::optional<CoordApexWitness> b1;
    std::optional<B2Witness> b2;
    std::optional<FlatBorderWitness> flat;
    ExoticSubtype exotic = ExoticSubtype::None;
    std::optional<std::vector<int>> cross_permutation;  // sigma with sigma(config) = listed set
};

std::optional<CoordApexWitness> match_b1(const PointConfig& config);
std::optional<B2Witness> match_b2(const PointConfig& config);
std::optional<FlatBorderWitness> match_flat_border(const PointConfig& config);
std::optional<std::vector<int>> match_cross_polytope(const PointConfig& config);

// First match in priority order B1, B2, CrossPolytope, FlatBorder. Purely
// syntactic; pre: n = 4, dim 3, positive covector.
FacetClass classify_facet(const PointConfig& config);

// Template match for the two exotic flat-border families, up to coordinate
// permutation. Pre: match_flat_border succeeded.
ExoticSubtype detect_exotic_subtype(const PointConfig& config);

enum class Polytope2DTag { B1Polytope, BorderPolytope, NotBPolytope };

struct PolytopeClass2D {
    Polytope2DTag tag = Polytope2DTag::NotBPolytope;
    bool swapped = false;  // pattern found after swapping the two coordinates
    std::optional<Point> apex;
};

// Classification of two-dimensional B-polytopes (up to swapping
// the coordinates); must agree with is_b_polytope.
PolytopeClass2D classify_b_polytope_2d(const PointConfig& config);

// Affine unimodular map q = linear (p - base).
struct UnimodularMap2D {
    Vec row0{1, 0}, row1{0, 1};
    Point base{0, 0};

    Point apply(const Point& p) const;
};

// Canonical representative of a marked polygon under affine unimodular maps:
// minimum over (hull vertex, incident primitive edge direction) charts, with
// the shear pinned so every x-coordinate is nonnegative and minimal, compared
// by (marked facets, points).
struct CanonicalMarked {
    MarkedPolytope polytope;
    UnimodularMap2D map;
};

CanonicalMarked unimodular_canonical_form_2d(const MarkedPolytope& mp);

enum class MarkedPolygonTag { B1Marked, B2Marked, FlatBorderMarked, NotMarkedB };

struct MarkedPolygonClass {
    MarkedPolygonTag tag = MarkedPolygonTag::NotMarkedB;
    std::optional<Face> pyramid_base;          // B1Marked: the marked side
    std::optional<std::pair<Face, Face>> strip;  // B2Marked: the two level sides
    std::optional<UnimodularMap2D> to_normal_form;  // FlatBorderMarked
};

// Classification of marked B-polygons; must agree with
// is_marked_b_polytope.
MarkedPolygonClass classify_marked_polygon(const MarkedPolytope& mp);

// The flat-border marked normal form {(0,0),(a,0),(0,1),(1,1)} with every
// side except [(0,1),(1,1)] marked.
MarkedPolytope flat_border_marked_template(Coord a);

std::vector<std::vector<int>> coordinate_permutations(int n);
PointConfig apply_coordinate_permutation(const PointConfig& config, const std::vector<int>& perm);

}  // namespace bfacet
