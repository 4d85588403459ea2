#pragma once

// Face lattice of a finite point configuration. A face is the intersection
// of a face of the convex hull with the set; a facet is a face whose affine
// span has codimension 1 inside the configuration's span.

#include <vector>

#include "bfacet/core.hpp"

namespace bfacet {

// A finite set of distinct lattice points with cached affine data. Points are
// kept sorted, so equal configurations compare equal.
class PointConfig {
public:
    PointConfig() = default;
    PointConfig(int ambient_dim, std::vector<Point> points);

    int ambient_dim() const { return n_; }
    const std::vector<Point>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    int dim() const { return affine_dim_; }
    bool in_orthant() const { return orthant_; }

    // Cached positive hyperplane; present iff dim == n-1 and the primitive
    // covector through the points is strictly positive.
    const std::optional<Hyperplane>& positive_hyperplane() const { return positive_h_; }

    // Throwing accessor matching the facet-candidate contract.
    const Hyperplane& require_positive_hyperplane() const;

    bool contains(const Point& p) const;

    bool operator==(const PointConfig& o) const { return n_ == o.n_ && pts_ == o.pts_; }
    bool operator<(const PointConfig& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return pts_ < o.pts_;
    }

private:
    int n_ = 0;
    std::vector<Point> pts_;
    int affine_dim_ = -1;
    std::optional<Hyperplane> positive_h_;
    bool orthant_ = true;
};

// A face with a certifying support functional: exactly the members attain
// max(support . x) = value over the parent configuration.
struct Face {
    std::vector<Point> members;  // sorted
    int dim = -1;
    Vec support;
    Coord value = 0;

    bool is_improper(const PointConfig& parent) const { return members.size() == parent.size(); }
    bool operator==(const Face& o) const { return members == o.members; }
};

// All faces of the configuration (proper faces of the hull intersected with
// the set, plus the configuration itself), sorted by (dim, members).
std::vector<Face> enumerate_faces(const PointConfig& config);

// Faces of codimension 1 inside aff(config). Errors when dim(config) == 0.
std::vector<Face> facets_of(const PointConfig& config);

// true iff some coordinate subspace of dimension dim(face)+1 contains every
// member, i.e. at most dim(face)+1 coordinates are nonzero across members.
bool is_v_face(const Face& face, int ambient_dim);

// V-faces with no proper V-face below them.
std::vector<Face> internal_v_faces(const PointConfig& config);

// Indices (into the given face list) of the internal V-faces.
std::vector<std::size_t> internal_v_face_indices(const std::vector<Face>& faces, int ambient_dim);

// Checks that the support functional certifies the face against the parent.
bool face_certificate_valid(const PointConfig& parent, const Face& face);

}  // namespace bfacet
