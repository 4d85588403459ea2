#pragma once

// Dimension reductions: projection along a coordinate subspace and the marked
// section through an affine subspace complementary to it.

#include <optional>
#include <set>
#include <vector>

#include "bfacet/predicates.hpp"

namespace bfacet {

// Nonempty set of coordinate axes (0-based).
struct CoordinateSubspace {
    std::vector<std::size_t> axes;  // sorted, distinct

    CoordinateSubspace(std::initializer_list<std::size_t> a) : CoordinateSubspace(std::vector<std::size_t>(a)) {}
    explicit CoordinateSubspace(std::vector<std::size_t> a);
    std::size_t dim() const { return axes.size(); }
    bool contains_axis(std::size_t i) const;
};

// Either a configuration member on a coordinate ray (the apex) or an explicit
// affine subspace of dimension n - 1 - dim(E).
struct SectionSpec {
    std::optional<Point> apex;
    std::optional<AffineSpan> explicit_h;

    static SectionSpec from_apex(Point p) { return SectionSpec{std::move(p), std::nullopt}; }
    static SectionSpec from_span(AffineSpan h) { return SectionSpec{std::nullopt, std::move(h)}; }
};

// Deletes the coordinates of E; duplicates collapse under set semantics.
PointConfig project(const PointConfig& config, const CoordinateSubspace& e);

// Vertices (b/a_i) e_i of the simplex cut by the configuration's positive
// hyperplane on the nonnegative orthant. Pre: positive covector, offset > 0.
std::vector<RationalPoint> delta_simplex(const PointConfig& config);

struct SectionResult {
    MarkedPolytope marked;        // tau_H in lattice chart coordinates of H
    std::vector<Point> tau_h;     // tau_H in ambient coordinates
    Point chart_base;             // lattice basepoint of the chart
    std::vector<Vec> chart_basis; // basis of the lattice H ∩ Z^n (relative)
};

// The marked section: config ∩ E must be a face that is a
// V-face but not a B-face; H spans the rest of the simplex Delta; tau_H =
// config ∩ H re-expressed in a pinned unimodular chart of H, with a facet
// marked iff it is tau_H ∩ {x_i = 0} for a coordinate hyperplane containing E
// such that H holds lattice points with x_i = 1.
SectionResult section_detail(const PointConfig& config, const CoordinateSubspace& e, const SectionSpec& spec);

MarkedPolytope section_marked(const PointConfig& config, const CoordinateSubspace& e, const SectionSpec& spec);

// Specialization: E is the apex's coordinate ray and H = aff(config \ {apex}).
MarkedPolytope section_from_apex(const PointConfig& config, const Point& apex);
SectionResult section_from_apex_detail(const PointConfig& config, const Point& apex);

// Members of the configuration supported on the axes of E.
std::vector<Point> intersect_with_subspace(const PointConfig& config, const CoordinateSubspace& e);

// Basis of the saturated lattice (aff span of the points) ∩ Z^n relative to
// the lexicographically least point; deterministic.
std::vector<Vec> saturated_direction_lattice(const std::vector<Point>& points);

}  // namespace bfacet
