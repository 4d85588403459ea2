#include "bfacet/reductions.hpp"

#include <algorithm>

namespace bfacet {

CoordinateSubspace::CoordinateSubspace(std::vector<std::size_t> a) : axes(std::move(a)) {
    if (axes.empty()) throw GeometryError("empty coordinate subspace");
    std::sort(axes.begin(), axes.end());
    if (std::adjacent_find(axes.begin(), axes.end()) != axes.end())
        throw GeometryError("repeated axis in coordinate subspace");
}

bool CoordinateSubspace::contains_axis(std::size_t i) const {
    return std::binary_search(axes.begin(), axes.end(), i);
}

PointConfig project(const PointConfig& config, const CoordinateSubspace& e) {
    const std::size_t n = static_cast<std::size_t>(config.ambient_dim());
    for (std::size_t a : e.axes)
        if (a >= n) throw GeometryError("axis out of range");
    if (e.dim() >= n) throw GeometryError("projection along all axes");
    std::set<Point> images;
    for (const Point& p : config.points()) {
        Point q;
        q.reserve(n - e.dim());
        for (std::size_t i = 0; i < n; ++i)
            if (!e.contains_axis(i)) q.push_back(p[i]);
        images.insert(std::move(q));
    }
    return PointConfig(static_cast<int>(n - e.dim()), std::vector<Point>(images.begin(), images.end()));
}

std::vector<RationalPoint> delta_simplex(const PointConfig& config) {
    const Hyperplane& h = config.require_positive_hyperplane();
    if (h.offset <= 0) throw GeometryError("facet plane must have positive offset");
    const std::size_t n = static_cast<std::size_t>(config.ambient_dim());
    std::vector<RationalPoint> verts;
    for (std::size_t i = 0; i < n; ++i) {
        RationalPoint v(n, Rational(0));
        v[i] = Rational(h.offset, h.covector[i]);
        verts.push_back(std::move(v));
    }
    return verts;
}

std::vector<Point> intersect_with_subspace(const PointConfig& config, const CoordinateSubspace& e) {
    std::vector<Point> out;
    for (const Point& p : config.points()) {
        bool inside = true;
        for (std::size_t i = 0; i < p.size() && inside; ++i)
            if (p[i] != 0 && !e.contains_axis(i)) inside = false;
        if (inside) out.push_back(p);
    }
    return out;
}

std::vector<Vec> saturated_direction_lattice(const std::vector<Point>& points) {
    if (points.empty()) throw GeometryError("empty point set");
    const std::size_t n = points[0].size();
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(point_sub(points[i], points[0]));
    std::vector<Vec> orth = integer_kernel_basis(diffs, n);
    return integer_kernel_basis(orth, n);
}

namespace {

const Face* find_face(const std::vector<Face>& faces, const std::vector<Point>& members) {
    for (const Face& f : faces)
        if (f.members == members) return &f;
    return nullptr;
}

}  // namespace

SectionResult section_detail(const PointConfig& config, const CoordinateSubspace& e, const SectionSpec& spec) {
    const std::size_t n = static_cast<std::size_t>(config.ambient_dim());
    for (std::size_t a : e.axes)
        if (a >= n) throw GeometryError("axis out of range");
    const Hyperplane& plane = config.require_positive_hyperplane();

    // Hypothesis: config ∩ E is a V-face witnessed by E (its dimension is
    // dim(E) - 1) but not a B-face.
    std::vector<Point> fe = intersect_with_subspace(config, e);
    if (fe.empty() || affine_dim(fe) != static_cast<int>(e.dim()) - 1)
        throw GeometryError("lemma hypothesis violated");
    std::vector<Face> faces = enumerate_faces(config);
    const Face* face_e = find_face(faces, fe);
    if (face_e == nullptr || !is_v_face(*face_e, config.ambient_dim()) || is_b_face(config, *face_e))
        throw GeometryError("lemma hypothesis violated");

    // The section subspace H.
    AffineSpan h;
    if (spec.apex) {
        if (!config.contains(*spec.apex)) throw GeometryError("apex not in configuration");
        std::vector<Point> rest;
        for (const Point& p : config.points())
            if (p != *spec.apex) rest.push_back(p);
        if (rest.empty()) throw GeometryError("configuration has no base");
        h = affine_span_of(rest);
    } else if (spec.explicit_h) {
        h = *spec.explicit_h;
        if (h.ambient_dim() != n) throw GeometryError("section subspace has wrong ambient dimension");
    } else {
        throw GeometryError("empty section spec");
    }

    if (h.dim() != n - 1 - e.dim()) throw GeometryError("section subspace has wrong dimension");
    if (h.dim() == 0) throw GeometryError("zero-dimensional sections are not supported");

    // H must lie inside aff(Delta) = the facet plane.
    {
        Rational base_val(0);
        for (std::size_t i = 0; i < n; ++i) base_val = base_val + h.base[i] * Rational(plane.covector[i]);
        if (!(base_val == Rational(plane.offset))) throw GeometryError("section subspace not inside the facet plane");
        for (const Vec& d : h.directions)
            if (dot(plane.covector, d) != 0) throw GeometryError("section subspace not inside the facet plane");
    }

    // aff(H ∪ (E ∩ Delta)) must be the whole of aff(Delta): together with the
    // simplex vertices (b/a_i) e_i, i in E, the span must reach dim n-1.
    {
        std::vector<std::vector<Rational>> dirs;
        for (const Vec& d : h.directions) dirs.emplace_back(d.begin(), d.end());
        for (std::size_t a : e.axes) {
            std::vector<Rational> diff(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i) diff[i] = -h.base[i];
            diff[a] = diff[a] + Rational(plane.offset, plane.covector[a]);
            dirs.push_back(std::move(diff));
        }
        std::vector<Vec> scaled;
        for (const auto& r : dirs) {
            Coord lcm = 1;
            for (const Rational& x : r) {
                Coord g = gcd_nonneg(lcm, x.den());
                lcm = checked_mul(lcm / g, x.den());
            }
            Vec v(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) v[i] = checked_mul(r[i].num(), lcm / r[i].den());
            scaled.push_back(std::move(v));
        }
        if (matrix_rank(scaled) != static_cast<int>(n) - 1)
            throw GeometryError("section subspace does not complement the coordinate subspace");
    }

    // tau_H and its dimension.
    std::vector<Point> tau_h;
    for (const Point& p : config.points())
        if (h.contains(p)) tau_h.push_back(p);
    if (tau_h.empty() || affine_dim(tau_h) != static_cast<int>(h.dim()))
        throw GeometryError("section has wrong dimension");

    // Pinned chart of the lattice H ∩ Z^n.
    Point base = *std::min_element(tau_h.begin(), tau_h.end());
    std::vector<Vec> basis = saturated_direction_lattice(tau_h);
    if (basis.size() != h.dim()) throw std::logic_error("chart basis has wrong rank");

    std::vector<Point> chart_pts;
    for (const Point& p : tau_h) {
        auto sol = solve_in_basis(basis, point_sub(p, base));
        if (!sol) throw std::logic_error("section point escapes its chart");
        Point q(sol->size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (!(*sol)[i].is_integer()) throw std::logic_error("non-integral chart coordinate");
            q[i] = (*sol)[i].num();
        }
        chart_pts.push_back(std::move(q));
    }

    PointConfig chart_config(static_cast<int>(h.dim()), chart_pts);
    std::vector<Face> chart_facets = facets_of(chart_config);

    // Mark tau_H ∩ {x_i = 0} for coordinate hyperplanes containing E whose
    // side of H holds lattice points with x_i = 1.
    std::vector<std::vector<Point>> marked;
    for (std::size_t i = 0; i < n; ++i) {
        if (e.contains_axis(i)) continue;
        std::vector<Point> g_chart;
        for (std::size_t t = 0; t < tau_h.size(); ++t)
            if (tau_h[t][i] == 0) g_chart.push_back(chart_pts[t]);
        if (g_chart.empty()) continue;
        std::sort(g_chart.begin(), g_chart.end());
        bool is_facet = false;
        for (const Face& f : chart_facets) is_facet = is_facet || f.members == g_chart;
        if (!is_facet) continue;
        // solvability of base[i] + sum t_j basis_j[i] = 1 over the integers
        Coord g = 0;
        for (const Vec& bvec : basis) g = gcd_nonneg(g, bvec[i]);
        Coord target = checked_sub(1, base[i]);
        bool reachable = (g == 0) ? (target == 0) : (target % g == 0);
        if (!reachable) continue;
        marked.push_back(std::move(g_chart));
    }

    return SectionResult{MarkedPolytope(chart_config, marked), std::move(tau_h), std::move(base),
                         std::move(basis)};
}

MarkedPolytope section_marked(const PointConfig& config, const CoordinateSubspace& e, const SectionSpec& spec) {
    return section_detail(config, e, spec).marked;
}

SectionResult section_from_apex_detail(const PointConfig& config, const Point& apex) {
    if (!config.contains(apex)) throw GeometryError("apex not in configuration");
    std::size_t axis = 0;
    int nonzero = 0;
    for (std::size_t i = 0; i < apex.size(); ++i)
        if (apex[i] != 0) {
            axis = i;
            ++nonzero;
        }
    if (nonzero != 1) throw GeometryError("apex is not on a coordinate ray");
    return section_detail(config, CoordinateSubspace{axis}, SectionSpec::from_apex(apex));
}

MarkedPolytope section_from_apex(const PointConfig& config, const Point& apex) {
    return section_from_apex_detail(config, apex).marked;
}

}  // namespace bfacet
