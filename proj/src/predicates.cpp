#include "bfacet/predicates.hpp"

#include <algorithm>

namespace bfacet {

Simplex::Simplex(std::vector<Point> verts) : vertices(std::move(verts)) {
    if (vertices.empty()) throw GeometryError("empty simplex");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw GeometryError("duplicate simplex vertices");
    if (affine_dim(vertices) != dim()) throw GeometryError("affinely dependent simplex vertices");
}

MarkedPolytope::MarkedPolytope(PointConfig config, const std::vector<std::vector<Point>>& marked_members)
    : config_(std::move(config)) {
    if (config_.dim() != config_.ambient_dim())
        throw GeometryError("marked polytope must be full-dimensional");
    facets_ = facets_of(config_);
    for (std::vector<Point> members : marked_members) {
        std::sort(members.begin(), members.end());
        auto it = std::find_if(facets_.begin(), facets_.end(),
                               [&](const Face& f) { return f.members == members; });
        if (it == facets_.end()) throw GeometryError("marked set is not a facet");
        if (std::find(marked_.begin(), marked_.end(), *it) == marked_.end()) marked_.push_back(*it);
    }
    std::sort(marked_.begin(), marked_.end(),
              [](const Face& a, const Face& b) { return a.members < b.members; });
    for (const Face& f : marked_) planes_.push_back(hyperplane_through(f.members));
}

bool MarkedPolytope::operator==(const MarkedPolytope& o) const {
    if (!(config_ == o.config_)) return false;
    if (marked_.size() != o.marked_.size()) return false;
    for (std::size_t i = 0; i < marked_.size(); ++i)
        if (marked_[i].members != o.marked_[i].members) return false;
    return true;
}

std::optional<CoordApexWitness> is_b_simplex(const Simplex& s) {
    const std::size_t n = s.vertices[0].size();
    if (s.vertices.size() == 1) {
        for (std::size_t i = 0; i < n; ++i)
            if (s.vertices[0][i] == 1) return CoordApexWitness{i, s.vertices[0]};
        return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ones = 0, zeros = 0;
        const Point* apex = nullptr;
        for (const Point& v : s.vertices) {
            if (v[i] == 0)
                ++zeros;
            else if (v[i] == 1) {
                ++ones;
                apex = &v;
            }
        }
        if (ones == 1 && zeros == s.vertices.size() - 1) return CoordApexWitness{i, *apex};
    }
    return std::nullopt;
}

bool is_b_segment(const Point& p, const Point& q) {
    if (p == q) throw GeometryError("degenerate segment");
    return is_b_simplex(Simplex({p, q})).has_value();
}

void for_each_simplex(const std::vector<Point>& points, std::size_t k,
                      const std::function<bool(const std::vector<Point>&)>& fn) {
    if (k == 0 || k > points.size()) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Point> sub(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) sub[i] = points[idx[i]];
        if (affine_dim(sub) == static_cast<int>(k) - 1) {
            if (!fn(sub)) return;
        }
        std::size_t i = k;
        bool done = true;
        while (i > 0) {
            --i;
            if (idx[i] != i + points.size() - k) {
                done = false;
                break;
            }
        }
        if (done) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool is_b_face(const PointConfig& config, const Face& f) {
    if (!face_certificate_valid(config, f)) throw GeometryError("not a face of the configuration");
    bool ok = true;
    for_each_simplex(f.members, static_cast<std::size_t>(f.dim) + 1, [&](const std::vector<Point>& sub) {
        if (!is_b_simplex(Simplex(sub))) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

Verdict is_b_facet(const PointConfig& config) {
    config.require_positive_hyperplane();
    Verdict v;
    for_each_simplex(config.points(), static_cast<std::size_t>(config.ambient_dim()),
                     [&](const std::vector<Point>& sub) {
                         Simplex s(sub);
                         if (!is_b_simplex(s)) {
                             v.holds = false;
                             v.counterexample = std::move(s);
                             return false;
                         }
                         return true;
                     });
    return v;
}

Verdict is_b_polytope(const PointConfig& config) {
    if (config.dim() != config.ambient_dim()) throw GeometryError("not full-dimensional");
    Verdict v;
    for_each_simplex(config.points(), static_cast<std::size_t>(config.ambient_dim()),
                     [&](const std::vector<Point>& sub) {
                         Simplex s(sub);
                         if (is_b_simplex(s)) return true;
                         if (span_contains_origin(sub)) return true;
                         v.holds = false;
                         v.counterexample = std::move(s);
                         return false;
                     });
    return v;
}

std::optional<Face> is_marked_b_simplex(const MarkedPolytope& mp, const Simplex& s) {
    const int n = mp.config().ambient_dim();
    if (static_cast<int>(s.vertices.size()) != n + 1)
        throw GeometryError("marked B-simplex test needs a full-dimensional simplex");
    for (const Point& v : s.vertices)
        if (!mp.config().contains(v)) throw GeometryError("simplex vertex outside the marked polytope");
    for (std::size_t i = 0; i < mp.marked().size(); ++i) {
        const Hyperplane& h = mp.marked_planes()[i];
        std::size_t on_plane = 0;
        Coord apex_height = -1;
        for (const Point& v : s.vertices) {
            Coord d = lattice_height(v, h);
            if (d == 0)
                ++on_plane;
            else
                apex_height = d;
        }
        if (on_plane == static_cast<std::size_t>(n) && apex_height == 1) return mp.marked()[i];
    }
    return std::nullopt;
}

Verdict is_marked_b_polytope(const MarkedPolytope& mp) {
    Verdict v;
    for_each_simplex(mp.config().points(), static_cast<std::size_t>(mp.config().ambient_dim()) + 1,
                     [&](const std::vector<Point>& sub) {
                         Simplex s(sub);
                         if (!is_marked_b_simplex(mp, s)) {
                             v.holds = false;
                             v.counterexample = std::move(s);
                             return false;
                         }
                         return true;
                     });
    return v;
}

}  // namespace bfacet
