#include "bfacet/classifier.hpp"

#include <algorithm>
#include <numeric>

namespace bfacet {

namespace {

Coord floordiv(Coord a, Coord b) {
    Coord q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Coord det2(const Vec& a, const Vec& b) {
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

std::pair<Coord, Coord> bezout(Coord a, Coord b) {
    // returns (x, y) with a x + b y = gcd(a, b)
    Coord x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Coord q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) {
        x0 = -x0;
        y0 = -y0;
    }
    return {x0, y0};
}

}  // namespace

std::vector<std::vector<int>> coordinate_permutations(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

PointConfig apply_coordinate_permutation(const PointConfig& config, const std::vector<int>& perm) {
    std::vector<Point> pts;
    pts.reserve(config.size());
    for (const Point& p : config.points()) {
        Point q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[perm[i]];
        pts.push_back(std::move(q));
    }
    return PointConfig(config.ambient_dim(), std::move(pts));
}

std::optional<CoordApexWitness> match_b1(const PointConfig& config) {
    const std::size_t n = static_cast<std::size_t>(config.ambient_dim());
    for (std::size_t i = 0; i < n; ++i) {
        const Point* apex = nullptr;
        std::size_t nonzero = 0;
        for (const Point& p : config.points())
            if (p[i] != 0) {
                ++nonzero;
                apex = &p;
            }
        if (nonzero == 1 && (*apex)[i] == 1) return CoordApexWitness{i, *apex};
    }
    return std::nullopt;
}

std::optional<B2Witness> match_b2(const PointConfig& config) {
    const std::size_t n = static_cast<std::size_t>(config.ambient_dim());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool ok = true;
            bool saw00 = false, saw10 = false, saw01 = false;
            for (const Point& p : config.points()) {
                Coord x = p[i], y = p[j];
                if (x == 0 && y == 0)
                    saw00 = true;
                else if (x == 1 && y == 0)
                    saw10 = true;
                else if (x == 0 && y == 1)
                    saw01 = true;
                else {
                    ok = false;
                    break;
                }
            }
            if (ok) return B2Witness{i, j, !(saw00 && saw10 && saw01)};
        }
    }
    return std::nullopt;
}

std::optional<FlatBorderWitness> match_flat_border(const PointConfig& config) {
    const std::size_t n = static_cast<std::size_t>(config.ambient_dim());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point* c = nullptr;
            bool ok = true;
            std::vector<const Point*> zz;
            for (const Point& p : config.points()) {
                if (p[i] != 0 && p[j] != 0) {
                    if (c != nullptr) {
                        ok = false;
                        break;
                    }
                    c = &p;
                }
                if (p[i] == 0 && p[j] == 0) zz.push_back(&p);
            }
            if (!ok || c == nullptr) continue;
            if ((*c)[i] != 1 || (*c)[j] != 1) continue;
            if (zz.size() < 2) continue;
            // any two distinct x_i = x_j = 0 points form a triangle with c
            return FlatBorderWitness{i, j, *zz[0], *zz[1], *c};
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> match_cross_polytope(const PointConfig& config) {
    if (config.ambient_dim() != 4 || config.size() != 6) return std::nullopt;
    static const std::vector<Point> target = {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0},
                                              {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}};
    for (const auto& perm : coordinate_permutations(4)) {
        if (apply_coordinate_permutation(config, perm).points() == target) return perm;
    }
    return std::nullopt;
}

FacetClass classify_facet(const PointConfig& config) {
    if (config.ambient_dim() != 4) throw GeometryError("classification requires ambient dimension 4");
    config.require_positive_hyperplane();
    FacetClass out;
    if (auto b1 = match_b1(config)) {
        out.tag = FacetTag::B1;
        out.b1 = b1;
        return out;
    }
    if (auto b2 = match_b2(config)) {
        out.tag = FacetTag::B2;
        out.b2 = b2;
        return out;
    }
    if (auto cross = match_cross_polytope(config)) {
        out.tag = FacetTag::CrossPolytope;
        out.cross_permutation = cross;
        return out;
    }
    if (auto flat = match_flat_border(config)) {
        out.tag = FacetTag::FlatBorder;
        out.flat = flat;
        out.exotic = detect_exotic_subtype(config);
        return out;
    }
    return out;
}

namespace {

bool match_pyramid_template(const std::vector<Point>& pts) {
    if (pts.size() != 5) return false;
    const Point *q = nullptr, *a = nullptr, *b = nullptr, *c = nullptr, *d = nullptr;
    for (const Point& p : pts) {
        const Point** role = nullptr;
        if (p[0] == 0 && p[1] == 0 && p[2] == 0)
            role = &q;
        else if (p[0] == 0 && p[1] == 0 && p[2] >= 1)
            role = &a;
        else if (p[1] == 0 && p[2] == 0 && p[0] >= 1)
            role = &b;
        else if (p[0] == 0 && p[1] == 1 && p[2] == 1)
            role = &c;
        else if (p[0] == 1 && p[1] == 1 && p[2] == 0)
            role = &d;
        if (role == nullptr || *role != nullptr) return false;
        *role = &p;
    }
    if (!q || !a || !b || !c || !d) return false;
    if ((*a)[2] != (*b)[0]) return false;  // the shared edge length a
    return affine_dim({*a, *b, *c, *d}) == 2;
}

bool match_circuit_template(const std::vector<Point>& pts) {
    if (pts.size() != 5) return false;
    auto fits = [&](const Point& p, int role) {
        switch (role) {
            case 0: return p[0] == 0 && p[1] == 0 && p[2] == 0;
            case 1: return p == Point{1, 1, 0, 0};
            case 2: return p == Point{0, 1, 0, 1};
            case 3: return p[1] == 0 && p[2] == 1 && p[3] == 0;
            case 4: return p[0] == 0 && p[1] == 0 && p[3] == 0;
            default: return false;
        }
    };
    std::vector<int> order = {0, 1, 2, 3, 4};
    std::sort(order.begin(), order.end());
    do {
        bool ok = true;
        for (int role = 0; role < 5 && ok; ++role) ok = fits(pts[order[role]], role);
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

}  // namespace

ExoticSubtype detect_exotic_subtype(const PointConfig& config) {
    if (config.ambient_dim() != 4 || config.size() != 5) return ExoticSubtype::None;
    for (const auto& perm : coordinate_permutations(4)) {
        if (match_pyramid_template(apply_coordinate_permutation(config, perm).points()))
            return ExoticSubtype::Pyramid;
    }
    for (const auto& perm : coordinate_permutations(4)) {
        if (match_circuit_template(apply_coordinate_permutation(config, perm).points()))
            return ExoticSubtype::Circuit;
    }
    return ExoticSubtype::None;
}

namespace {

std::optional<PolytopeClass2D> match_b1_polytope(const std::vector<Point>& pts, bool swapped) {
    auto coord = [&](const Point& p, int k) { return swapped ? p[1 - k] : p[k]; };
    const Point* apex = nullptr;
    std::size_t off_axis = 0, on_axis = 0;
    for (const Point& p : pts) {
        if (coord(p, 1) == 0)
            ++on_axis;
        else {
            ++off_axis;
            apex = &p;
        }
    }
    if (off_axis == 1 && coord(*apex, 1) == 1 && on_axis >= 2)
        return PolytopeClass2D{Polytope2DTag::B1Polytope, swapped, *apex};
    return std::nullopt;
}

std::optional<PolytopeClass2D> match_border_polytope(const std::vector<Point>& pts, bool swapped) {
    auto view = [&](const Point& p) { return swapped ? Point{p[1], p[0]} : p; };
    bool saw01 = false, saw11 = false, saw_ray = false;
    for (const Point& p : pts) {
        Point q = view(p);
        if (q == Point{0, 1})
            saw01 = true;
        else if (q == Point{1, 1})
            saw11 = true;
        else if (q[1] == 0 && q[0] >= 1)
            saw_ray = true;
        else if (q == Point{0, 0})
            continue;
        else
            return std::nullopt;
    }
    if (saw01 && saw11 && saw_ray) return PolytopeClass2D{Polytope2DTag::BorderPolytope, swapped, std::nullopt};
    return std::nullopt;
}

}  // namespace

PolytopeClass2D classify_b_polytope_2d(const PointConfig& config) {
    if (config.ambient_dim() != 2 || config.dim() != 2)
        throw GeometryError("two-dimensional classification requires a full-dimensional planar set");
    for (bool swapped : {false, true})
        if (auto m = match_b1_polytope(config.points(), swapped)) return *m;
    for (bool swapped : {false, true})
        if (auto m = match_border_polytope(config.points(), swapped)) return *m;
    return PolytopeClass2D{};
}

Point UnimodularMap2D::apply(const Point& p) const {
    Vec d = point_sub(p, base);
    return Point{dot(row0, d), dot(row1, d)};
}

namespace {

struct Candidate {
    std::vector<std::vector<Point>> marks;
    std::vector<Point> points;
    UnimodularMap2D map;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
    if (a.marks != b.marks) return a.marks < b.marks;
    return a.points < b.points;
}

}  // namespace

CanonicalMarked unimodular_canonical_form_2d(const MarkedPolytope& mp) {
    const PointConfig& config = mp.config();
    if (config.ambient_dim() != 2) throw GeometryError("canonical form requires a planar marked polytope");

    std::optional<Candidate> best;
    for (const Face& edge : mp.facets()) {
        const Point& lo = edge.members.front();
        const Point& hi = edge.members.back();
        for (int end = 0; end < 2; ++end) {
            Point v = end == 0 ? lo : hi;
            Vec raw = point_sub(end == 0 ? hi : lo, v);
            Coord g = gcd_nonneg(raw[0], raw[1]);
            Vec d{raw[0] / g, raw[1] / g};  // direction along the edge, away from v
            // y must be nonnegative on the configuration
            Coord s = 0;
            for (const Point& p : config.points()) {
                Coord dv = det2(d, point_sub(p, v));
                if (dv != 0) {
                    s = dv > 0 ? 1 : -1;
                    break;
                }
            }
            if (s == 0) throw std::logic_error("degenerate marked polytope");
            Vec yrow{checked_mul(-s, d[1]), checked_mul(s, d[0])};
            auto [bx, by] = bezout(d[0], d[1]);
            Vec xrow{bx, by};

            // shear pin: largest k keeping all x-coordinates nonnegative
            Coord k = 0;
            bool have_k = false;
            for (const Point& p : config.points()) {
                Vec rel = point_sub(p, v);
                Coord y = dot(yrow, rel);
                if (y <= 0) continue;
                Coord cand = floordiv(dot(xrow, rel), y);
                if (!have_k || cand < k) {
                    k = cand;
                    have_k = true;
                }
            }
            UnimodularMap2D map;
            map.base = v;
            map.row1 = yrow;
            map.row0 = Vec{checked_sub(xrow[0], checked_mul(k, yrow[0])),
                           checked_sub(xrow[1], checked_mul(k, yrow[1]))};

            Candidate cand;
            cand.map = map;
            for (const Point& p : config.points()) cand.points.push_back(map.apply(p));
            std::sort(cand.points.begin(), cand.points.end());
            for (const Face& f : mp.marked()) {
                std::vector<Point> mk;
                for (const Point& p : f.members) mk.push_back(map.apply(p));
                std::sort(mk.begin(), mk.end());
                cand.marks.push_back(std::move(mk));
            }
            std::sort(cand.marks.begin(), cand.marks.end());
            if (!best || candidate_less(cand, *best)) best = std::move(cand);
        }
    }
    if (!best) throw std::logic_error("no canonical candidate");
    PointConfig canon_config(2, best->points);
    return CanonicalMarked{MarkedPolytope(std::move(canon_config), best->marks), best->map};
}

MarkedPolytope flat_border_marked_template(Coord a) {
    if (a < 1) throw GeometryError("flat border template needs a >= 1");
    PointConfig config(2, {{0, 0}, {a, 0}, {0, 1}, {1, 1}});
    return MarkedPolytope(config, {{{0, 0}, {a, 0}}, {{0, 0}, {0, 1}}, {{a, 0}, {1, 1}}});
}

namespace {

Coord twice_hull_area(const std::vector<Point>& pts) {
    // monotone chain on the (already lex-sorted) points
    std::vector<Point> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return checked_sub(checked_mul(a[0] - o[0], b[1] - o[1]), checked_mul(a[1] - o[1], b[0] - o[0]));
    };
    std::vector<Point> hull;
    for (const Point& p : sorted) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    std::size_t lower = hull.size() + 1;
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0) hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    Coord area2 = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point& p = hull[i];
        const Point& q = hull[(i + 1) % hull.size()];
        area2 = checked_add(area2, checked_sub(checked_mul(p[0], q[1]), checked_mul(p[1], q[0])));
    }
    return checked_abs(area2);
}

}  // namespace

MarkedPolygonClass classify_marked_polygon(const MarkedPolytope& mp) {
    if (mp.config().ambient_dim() != 2)
        throw GeometryError("marked polygon classification requires dimension 2");
    MarkedPolygonClass out;

    // pyramid with base on a marked side and height 1
    for (std::size_t i = 0; i < mp.marked().size(); ++i) {
        const Hyperplane& h = mp.marked_planes()[i];
        std::size_t off = 0;
        Coord height = 0;
        for (const Point& p : mp.config().points()) {
            Coord d = lattice_height(p, h);
            if (d > 0) {
                ++off;
                height = d;
            }
        }
        if (off == 1 && height == 1) {
            out.tag = MarkedPolygonTag::B1Marked;
            out.pyramid_base = mp.marked()[i];
            return out;
        }
    }

    // strip between two marked parallel sides at lattice distance 1
    for (std::size_t i = 0; i < mp.marked().size(); ++i) {
        const Hyperplane& h = mp.marked_planes()[i];
        Coord s = 0;
        bool in_strip = true;
        Coord maxval = 0;
        for (const Point& p : mp.config().points()) {
            Coord v = h.eval(p);
            if (v != 0 && s == 0) s = v > 0 ? 1 : -1;
            Coord sv = s == 0 ? v : s * v;
            if (sv < 0 || sv > 1) {
                in_strip = false;
                break;
            }
            maxval = std::max(maxval, sv);
        }
        if (!in_strip || maxval != 1) continue;
        std::vector<Point> far_side;
        for (const Point& p : mp.config().points())
            if (s * h.eval(p) == 1) far_side.push_back(p);
        std::sort(far_side.begin(), far_side.end());
        for (std::size_t j = 0; j < mp.marked().size(); ++j) {
            if (mp.marked()[j].members == far_side) {
                out.tag = MarkedPolygonTag::B2Marked;
                out.strip = std::make_pair(mp.marked()[i], mp.marked()[j]);
                return out;
            }
        }
    }

    // flat border normal form {(0,0),(a,0),(0,1),(1,1)}, a > 1, three marks
    if (mp.config().size() == 4 && mp.marked().size() == 3) {
        CanonicalMarked canon = unimodular_canonical_form_2d(mp);
        Coord a = checked_sub(twice_hull_area(canon.polytope.config().points()), 1);
        if (a >= 2) {
            CanonicalMarked tmpl = unimodular_canonical_form_2d(flat_border_marked_template(a));
            if (canon.polytope == tmpl.polytope) {
                out.tag = MarkedPolygonTag::FlatBorderMarked;
                out.to_normal_form = canon.map;
                return out;
            }
        }
    }
    return out;
}

}  // namespace bfacet
