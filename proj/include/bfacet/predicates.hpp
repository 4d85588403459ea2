#pragma once

// The B-hierarchy: B-simplex, B-segment, B-face, B-facet, B-polytope and
// marked B-polytope, each returning witnesses or re-checkable counterexamples.

#include <functional>
#include <optional>
#include <vector>

#include "bfacet/faces.hpp"

namespace bfacet {

// Affinely independent vertex set.
struct Simplex {
    std::vector<Point> vertices;  // sorted

    explicit Simplex(std::vector<Point> verts);
    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

struct CoordApexWitness {
    std::size_t coord = 0;  // 0-based coordinate index
    Point apex;
    bool operator==(const CoordApexWitness&) const = default;
};

struct Verdict {
    bool holds = true;
    std::optional<Simplex> counterexample;
};

// A full-dimensional configuration with marked facets.
class MarkedPolytope {
public:
    MarkedPolytope(PointConfig config, const std::vector<std::vector<Point>>& marked_members);

    const PointConfig& config() const { return config_; }
    const std::vector<Face>& marked() const { return marked_; }
    const std::vector<Hyperplane>& marked_planes() const { return planes_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool operator==(const MarkedPolytope& o) const;

private:
    PointConfig config_;
    std::vector<Face> facets_;
    std::vector<Face> marked_;        // sorted by members
    std::vector<Hyperplane> planes_;  // aff of each marked facet
};

// Witness (i, apex): exactly one vertex has x_i = 1 and the others x_i = 0.
// A single point is a B-simplex iff some coordinate equals 1.
std::optional<CoordApexWitness> is_b_simplex(const Simplex& s);

bool is_b_segment(const Point& p, const Point& q);

// Every dim(F)-dimensional simplex with vertices in F is a B-simplex.
bool is_b_face(const PointConfig& config, const Face& f);

// Every (n-1)-dimensional simplex with vertices in the configuration is a
// B-simplex. Pre: dim = n-1 and a positive covector; errors identify which
// precondition failed.
Verdict is_b_facet(const PointConfig& config);

// Every (n-1)-dimensional simplex is a B-simplex or has the origin in its
// affine span. Pre: full-dimensional.
Verdict is_b_polytope(const PointConfig& config);

// Witness: a marked facet such that n vertices lie on its affine span and the
// remaining vertex has lattice height 1 from it.
std::optional<Face> is_marked_b_simplex(const MarkedPolytope& mp, const Simplex& s);

// Every n-simplex with vertices in the configuration is a marked B-simplex.
Verdict is_marked_b_polytope(const MarkedPolytope& mp);

// Enumerates size-k subsets in lexicographic order, invoking fn on the
// affinely independent ones. fn returns false to stop early.
void for_each_simplex(const std::vector<Point>& points, std::size_t k,
                      const std::function<bool(const std::vector<Point>&)>& fn);

}  // namespace bfacet
