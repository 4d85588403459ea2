#include "bfacet/faces.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bfacet {

PointConfig::PointConfig(int ambient_dim, std::vector<Point> points) : n_(ambient_dim), pts_(std::move(points)) {
    if (n_ <= 0) throw GeometryError("ambient dimension must be positive");
    if (pts_.empty()) throw GeometryError("empty configuration");
    for (const Point& p : pts_) {
        if (static_cast<int>(p.size()) != n_) throw GeometryError("point has wrong dimension");
        for (Coord x : p) orthant_ = orthant_ && x >= 0;
    }
    std::sort(pts_.begin(), pts_.end());
    if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
        throw GeometryError("duplicate points in configuration");
    affine_dim_ = affine_dim(pts_);
    if (affine_dim_ == n_ - 1) {
        try {
            positive_h_ = positive_hyperplane_of(pts_);
        } catch (const GeometryError&) {
            positive_h_.reset();
        }
    }
}

const Hyperplane& PointConfig::require_positive_hyperplane() const {
    if (affine_dim_ != n_ - 1) throw GeometryError("not a hyperplane configuration");
    if (!positive_h_) throw GeometryError("not a positive-covector configuration");
    return *positive_h_;
}

bool PointConfig::contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

namespace {

// Facet member-sets of the sub-configuration `members` (affine dim `mdim`),
// each with a local functional vanishing on the facet flat and negative on
// the rest of `members`.
struct LocalFacet {
    std::vector<Point> members;
    Vec functional;  // max over parent members attained exactly on `members`
};

std::vector<LocalFacet> local_facets(const std::vector<Point>& members, int mdim, std::size_t n) {
    std::vector<LocalFacet> out;
    if (mdim <= 0) return out;
    std::set<std::vector<Point>> seen;
    const std::size_t k = static_cast<std::size_t>(mdim);  // candidate flat spans k points
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::vector<Point> sub;
        for (std::size_t i : idx) sub.push_back(members[i]);
        if (affine_dim(sub) == mdim - 1) {
            std::vector<Vec> diffs;
            for (std::size_t i = 1; i < sub.size(); ++i) diffs.push_back(point_sub(sub[i], sub[0]));
            std::vector<Vec> kernel = integer_kernel_basis(diffs, n);
            // pick a kernel vector that separates within aff(members)
            const Point& t0 = sub[0];
            Vec w;
            for (const Point& u : members) {
                Vec du = point_sub(u, t0);
                for (const Vec& cand : kernel) {
                    if (dot(cand, du) != 0) {
                        w = cand;
                        break;
                    }
                }
                if (!w.empty()) break;
            }
            if (!w.empty()) {
                bool has_pos = false, has_neg = false;
                std::vector<Point> face_members;
                for (const Point& p : members) {
                    Coord v = dot(w, point_sub(p, t0));
                    if (v > 0) has_pos = true;
                    if (v < 0) has_neg = true;
                    if (v == 0) face_members.push_back(p);
                }
                if (!(has_pos && has_neg)) {
                    if (has_pos)
                        for (Coord& x : w) x = checked_neg(x);
                    std::sort(face_members.begin(), face_members.end());
                    if (seen.insert(face_members).second)
                        out.push_back(LocalFacet{std::move(face_members), std::move(w)});
                }
            }
        }
        // next k-combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + members.size() - k) break;
        }
        if (idx[i] == i + members.size() - k) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::vector<Face> enumerate_faces(const PointConfig& config) {
    const std::size_t n = static_cast<std::size_t>(config.ambient_dim());
    std::map<std::vector<Point>, Face> found;

    Face improper;
    improper.members = config.points();
    improper.dim = config.dim();
    improper.support = Vec(n, 0);
    improper.value = 0;
    found.emplace(improper.members, improper);

    std::vector<Face> queue = {improper};
    while (!queue.empty()) {
        Face parent = std::move(queue.back());
        queue.pop_back();
        if (parent.dim <= 0) continue;
        for (LocalFacet& lf : local_facets(parent.members, parent.dim, n)) {
            if (found.count(lf.members)) continue;
            // Compose a global certificate: M * parent.support + local, with M
            // beyond the local functional's range over the whole configuration.
            const Point& t0 = lf.members[0];
            Coord local_off = dot(lf.functional, t0);
            Coord m = 1;
            for (const Point& p : config.points())
                m = std::max(m, checked_add(checked_abs(checked_sub(dot(lf.functional, p), local_off)), 1));
            Face f;
            f.members = std::move(lf.members);
            f.dim = affine_dim(f.members);
            f.support.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                f.support[i] = checked_add(checked_mul(m, parent.support[i]), lf.functional[i]);
            f.value = checked_add(checked_mul(m, parent.value), local_off);
            found.emplace(f.members, f);
            queue.push_back(std::move(f));
        }
    }

    std::vector<Face> faces;
    faces.reserve(found.size());
    for (auto& [members, face] : found) faces.push_back(face);
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.members < b.members;
    });
    return faces;
}

std::vector<Face> facets_of(const PointConfig& config) {
    if (config.dim() < 1) throw GeometryError("configuration has no facets");
    std::vector<Face> out;
    for (Face& f : enumerate_faces(config))
        if (f.dim == config.dim() - 1) out.push_back(std::move(f));
    return out;
}

bool is_v_face(const Face& face, int ambient_dim) {
    if (face.dim + 1 > ambient_dim) return false;
    std::vector<bool> used(static_cast<std::size_t>(ambient_dim), false);
    int support_coords = 0;
    for (const Point& p : face.members)
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0 && !used[i]) {
                used[i] = true;
                ++support_coords;
            }
    return support_coords <= face.dim + 1;
}

std::vector<std::size_t> internal_v_face_indices(const std::vector<Face>& faces, int ambient_dim) {
    // Faces of a face re-rooted as its own configuration coincide with the
    // parent's faces contained in it, so internality can be read off the
    // global face list.
    std::vector<bool> v(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) v[i] = is_v_face(faces[i], ambient_dim);

    auto subset = [](const std::vector<Point>& a, const std::vector<Point>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (!v[i]) continue;
        bool internal = true;
        for (std::size_t j = 0; j < faces.size() && internal; ++j) {
            if (j == i || !v[j]) continue;
            if (faces[j].members.size() < faces[i].members.size() && subset(faces[j].members, faces[i].members))
                internal = false;
        }
        if (internal) out.push_back(i);
    }
    return out;
}

std::vector<Face> internal_v_faces(const PointConfig& config) {
    std::vector<Face> faces = enumerate_faces(config);
    std::vector<Face> out;
    for (std::size_t i : internal_v_face_indices(faces, config.ambient_dim())) out.push_back(faces[i]);
    return out;
}

bool face_certificate_valid(const PointConfig& parent, const Face& face) {
    if (face.members.empty()) return false;
    for (const Point& p : face.members)
        if (!parent.contains(p)) return false;
    for (const Point& p : parent.points()) {
        Coord v = dot(face.support, p);
        bool member = std::binary_search(face.members.begin(), face.members.end(), p);
        if (member && v != face.value) return false;
        if (!member && v >= face.value) return false;
    }
    return true;
}

}  // namespace bfacet
