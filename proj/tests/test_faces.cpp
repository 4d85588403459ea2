#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bfacet/faces.hpp"
#include "oracles.hpp"

using namespace bfacet;

namespace {

const std::vector<Point> kCrossPolytope = {
    {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};

std::set<std::vector<Point>> member_sets(const std::vector<Face>& faces, bool proper_only, std::size_t total) {
    std::set<std::vector<Point>> out;
    for (const Face& f : faces) {
        if (proper_only && f.members.size() == total) continue;
        out.insert(f.members);
    }
    return out;
}

std::vector<Point> apply_perm(const std::vector<Point>& pts, const std::vector<int>& perm) {
    std::vector<Point> out;
    for (const Point& p : pts) {
        Point q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[perm[i]];
        out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Literal re-rooted internality: proper faces of F computed with F as its own
// parent configuration, V-property in ambient coordinates.
bool internal_by_rerooting(const PointConfig& config, const Face& f) {
    if (!is_v_face(f, config.ambient_dim())) return false;
    PointConfig sub(config.ambient_dim(), f.members);
    for (const Face& g : enumerate_faces(sub)) {
        if (g.members.size() == f.members.size()) continue;
        if (is_v_face(g, config.ambient_dim())) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("triangle faces") {
    PointConfig tri(2, {{0, 0}, {1, 0}, {0, 1}});
    auto faces = enumerate_faces(tri);
    int by_dim[3] = {0, 0, 0};
    for (const Face& f : faces) ++by_dim[f.dim];
    CHECK(by_dim[0] == 3);
    CHECK(by_dim[1] == 3);
    CHECK(by_dim[2] == 1);
    for (const Face& f : faces) CHECK(face_certificate_valid(tri, f));
}

TEST_CASE("segment in Z^1") {
    PointConfig seg(1, {{0}, {1}});
    auto faces = enumerate_faces(seg);
    REQUIRE(faces.size() == 3);
    CHECK(faces[0].members == std::vector<Point>{{0}});
    CHECK(faces[1].members == std::vector<Point>{{1}});
    CHECK(faces[2].members.size() == 2);
}

TEST_CASE("square facets") {
    PointConfig sq(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(facets_of(sq).size() == 4);
}

TEST_CASE("cross-polytope face lattice matches the support-grid oracle") {
    PointConfig cross(4, kCrossPolytope);
    auto faces = enumerate_faces(cross);

    auto expected = oracle::support_grid_faces(kCrossPolytope, 2);
    auto got = member_sets(faces, /*proper_only=*/true, kCrossPolytope.size());
    CHECK(expected == got);

    int by_dim[4] = {0, 0, 0, 0};
    for (const Face& f : faces) ++by_dim[f.dim];
    CHECK(by_dim[0] == 6);   // vertices
    CHECK(by_dim[1] == 12);  // edges
    CHECK(by_dim[2] == 8);   // triangle facets
    CHECK(by_dim[3] == 1);   // the configuration itself

    CHECK(facets_of(cross).size() == 8);
    for (const Face& f : faces) CHECK(face_certificate_valid(cross, f));
}

TEST_CASE("collinear interior points are not faces") {
    PointConfig seg(2, {{0, 0}, {1, 1}, {2, 2}});
    auto faces = enumerate_faces(seg);
    REQUIRE(faces.size() == 3);
    CHECK(faces[0].members == std::vector<Point>{{0, 0}});
    CHECK(faces[1].members == std::vector<Point>{{2, 2}});
    CHECK(faces[2].members.size() == 3);
}

TEST_CASE("is_v_face") {
    Face vertex_axis{{{0, 0, 3, 0}}, 0, {}, 0};
    CHECK(is_v_face(vertex_axis, 4));
    Face vertex_off{{{1, 1, 0, 0}}, 0, {}, 0};
    CHECK_FALSE(is_v_face(vertex_off, 4));
    Face triangle{{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}}, 2, {}, 0};
    CHECK(is_v_face(triangle, 4));  // contained in Ox1x2x3
}

TEST_CASE("internal V-faces of simple configurations") {
    SUBCASE("collinear V-config in Z^2") {
        PointConfig c(2, {{2, 0}, {0, 2}, {1, 1}});
        auto internal = internal_v_faces(c);
        std::set<std::vector<Point>> got = member_sets(internal, false, 99);
        std::set<std::vector<Point>> expected = {{{0, 2}}, {{2, 0}}};
        CHECK(got == expected);
    }
    SUBCASE("segment in Z^3") {
        PointConfig c(3, {{3, 0, 0}, {0, 3, 0}});
        auto internal = internal_v_faces(c);
        std::set<std::vector<Point>> got = member_sets(internal, false, 99);
        std::set<std::vector<Point>> expected = {{{0, 3, 0}}, {{3, 0, 0}}};
        CHECK(got == expected);
    }
    SUBCASE("cross-polytope") {
        // No vertex or edge is a V-face (too many nonzero coordinates); the
        // internal V-faces are the four coordinate-zero triangles.
        PointConfig cross(4, kCrossPolytope);
        auto internal = internal_v_faces(cross);
        REQUIRE(internal.size() == 4);
        for (const Face& f : internal) {
            CHECK(f.dim == 2);
            CHECK(f.members.size() == 3);
            // each triangle is config ∩ {x_k = 0} for some k
            bool found_zero_coord = false;
            for (int k = 0; k < 4; ++k) {
                bool all_zero = true;
                for (const Point& p : f.members) all_zero = all_zero && p[k] == 0;
                found_zero_coord = found_zero_coord || all_zero;
            }
            CHECK(found_zero_coord);
        }
    }
}

TEST_CASE("internality agrees with literal re-rooted computation") {
    auto gen = oracle::rng(31337);
    std::uniform_int_distribution<int> ndist(2, 4), sz(2, 7);
    std::uniform_int_distribution<Coord> val(0, 3);
    for (int t = 0; t < 150; ++t) {
        int n = ndist(gen);
        std::set<Point> pts;
        int count = sz(gen);
        while (static_cast<int>(pts.size()) < count) {
            Point p(n);
            for (Coord& x : p) x = val(gen);
            pts.insert(p);
        }
        PointConfig c(n, std::vector<Point>(pts.begin(), pts.end()));
        auto faces = enumerate_faces(c);
        auto internal = internal_v_faces(c);
        std::set<std::vector<Point>> internal_sets = member_sets(internal, false, 99);
        for (const Face& f : faces) {
            CAPTURE(format_points(c.points()));
            CAPTURE(format_points(f.members));
            CHECK(internal_by_rerooting(c, f) == (internal_sets.count(f.members) > 0));
        }
    }
}

TEST_CASE("face enumeration is permutation equivariant") {
    auto gen = oracle::rng(2222);
    std::uniform_int_distribution<int> sz(3, 7);
    std::uniform_int_distribution<Coord> val(0, 3);
    std::vector<std::vector<int>> perms = {{1, 0, 2, 3}, {3, 2, 1, 0}, {1, 2, 3, 0}};
    for (int t = 0; t < 60; ++t) {
        std::set<Point> pts;
        int count = sz(gen);
        while (static_cast<int>(pts.size()) < count) {
            Point p(4);
            for (Coord& x : p) x = val(gen);
            pts.insert(p);
        }
        PointConfig c(4, std::vector<Point>(pts.begin(), pts.end()));
        auto base = enumerate_faces(c);
        for (const auto& perm : perms) {
            PointConfig cp(4, apply_perm(c.points(), perm));
            auto mapped = enumerate_faces(cp);
            std::set<std::vector<Point>> expect;
            for (const Face& f : base) expect.insert(apply_perm(f.members, perm));
            std::set<std::vector<Point>> got = member_sets(mapped, false, 99);
            CHECK(expect == got);
        }
    }
}

TEST_CASE("support-grid oracle faces are all found by the enumeration") {
    // The grid oracle is complete only for small normals, so this is a
    // one-sided inclusion: everything it finds must be a real face.
    auto gen = oracle::rng(99331);
    std::uniform_int_distribution<int> ndist(2, 4), sz(3, 7);
    std::uniform_int_distribution<Coord> val(0, 2);
    for (int t = 0; t < 80; ++t) {
        int n = ndist(gen);
        std::set<Point> pts;
        int count = sz(gen);
        while (static_cast<int>(pts.size()) < count) {
            Point p(n);
            for (Coord& x : p) x = val(gen);
            pts.insert(p);
        }
        std::vector<Point> v(pts.begin(), pts.end());
        PointConfig c(n, v);
        auto enumerated = member_sets(enumerate_faces(c), true, c.size());
        for (const auto& face : oracle::support_grid_faces(v, 2)) {
            CAPTURE(format_points(v));
            CAPTURE(format_points(face));
            CHECK(enumerated.count(face) == 1);
        }
    }
}

TEST_CASE("every face carries a strict support certificate") {
    auto gen = oracle::rng(555);
    std::uniform_int_distribution<int> ndist(1, 4), sz(1, 8);
    std::uniform_int_distribution<Coord> val(0, 4);
    for (int t = 0; t < 100; ++t) {
        int n = ndist(gen);
        std::set<Point> pts;
        int count = std::min(sz(gen), n == 1 ? 5 : 8);
        while (static_cast<int>(pts.size()) < count) {
            Point p(n);
            for (Coord& x : p) x = val(gen);
            pts.insert(p);
        }
        PointConfig c(n, std::vector<Point>(pts.begin(), pts.end()));
        for (const Face& f : enumerate_faces(c)) {
            CAPTURE(format_points(c.points()));
            CHECK(face_certificate_valid(c, f));
        }
    }
}

TEST_CASE("facets_of requires positive dimension") {
    PointConfig single(3, {{1, 2, 3}});
    CHECK_THROWS_AS(facets_of(single), GeometryError);
}
