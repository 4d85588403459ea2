#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bfacet/predicates.hpp"
#include "oracles.hpp"

using namespace bfacet;

namespace {

const std::vector<Point> kCrossPolytope = {
    {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};

const std::vector<Point> kFlatBorderExample = {
    {0, 0, 0, 5}, {0, 0, 1, 4}, {1, 1, 0, 3}, {1, 0, 2, 2}, {0, 1, 2, 2}};

// B1 pyramid over the x4 = 0 hyperplane inside the sum-2 plane.
const std::vector<Point> kB1Instance = {
    {0, 0, 1, 1}, {2, 0, 0, 0}, {0, 2, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}};

Face improper_face(const PointConfig& c) {
    for (const Face& f : enumerate_faces(c))
        if (f.members.size() == c.size()) return f;
    throw std::logic_error("no improper face");
}

std::vector<Point> apply_perm(const std::vector<Point>& pts, const std::vector<int>& perm) {
    std::vector<Point> out;
    for (const Point& p : pts) {
        Point q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[perm[i]];
        out.push_back(q);
    }
    return out;
}

}  // namespace

TEST_CASE("is_b_simplex") {
    SUBCASE("segment with 0/1 pattern in coordinate 3 (1-based)") {
        auto w = is_b_simplex(Simplex({{0, 0, 2, 0}, {0, 1, 5, 0}}));
        REQUIRE(w.has_value());
        CHECK(w->coord == 1);
        CHECK(w->apex == Point{0, 1, 5, 0});
    }
    SUBCASE("tetrahedron from the cross-polytope") {
        std::vector<Point> verts = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}};
        CHECK(oracle::rational_affine_dim(verts) == 3);
        auto w = is_b_simplex(Simplex(verts));
        REQUIRE(w.has_value());
        CHECK(w->coord == 3);
        CHECK(w->apex == Point{1, 0, 0, 1});
    }
    SUBCASE("counterexample simplex inside the five-point configuration") {
        std::vector<Point> verts = {{0, 0, 1, 4}, {1, 1, 0, 3}, {1, 0, 2, 2}, {0, 1, 2, 2}};
        CHECK(oracle::rational_affine_dim(verts) == 3);
        CHECK_FALSE(is_b_simplex(Simplex(verts)).has_value());
    }
    SUBCASE("single points") {
        CHECK(is_b_simplex(Simplex({{0, 0, 1, 0}})).has_value());
        CHECK_FALSE(is_b_simplex(Simplex({{0, 0, 2, 0}})).has_value());
    }
}

TEST_CASE("is_b_segment") {
    CHECK(is_b_segment({0, 0, 3, 0}, {1, 0, 0, 2}));
    CHECK_FALSE(is_b_segment({2, 0, 0, 0}, {0, 0, 2, 0}));
    CHECK(is_b_segment({0, 1}, {1, 1}));
    CHECK_THROWS_AS(is_b_segment({1, 1}, {1, 1}), GeometryError);
}

TEST_CASE("is_b_face") {
    PointConfig pt(4, {{0, 0, 1, 0}});
    CHECK(is_b_face(pt, improper_face(pt)));

    PointConfig bad_seg(4, {{2, 0, 0, 0}, {0, 0, 2, 0}});
    CHECK_FALSE(is_b_face(bad_seg, improper_face(bad_seg)));

    PointConfig good_seg(4, {{0, 0, 0, 5}, {0, 0, 1, 4}});
    CHECK(is_b_face(good_seg, improper_face(good_seg)));

    Face fake{{{1, 2, 3, 4}}, 0, {0, 0, 0, 0}, 0};
    CHECK_THROWS_AS(is_b_face(pt, fake), GeometryError);
}

TEST_CASE("is_b_facet") {
    SUBCASE("cross-polytope holds with exactly 12 simplices among 15 subsets") {
        PointConfig cross(4, kCrossPolytope);
        CHECK(is_b_facet(cross).holds);
        int total = 0, independent = 0;
        std::vector<std::size_t> idx = {0, 1, 2, 3};
        std::vector<Point> pts = cross.points();
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = a + 1; b < 6; ++b)
                for (std::size_t c = b + 1; c < 6; ++c)
                    for (std::size_t d = c + 1; d < 6; ++d) {
                        ++total;
                        std::vector<Point> sub = {pts[a], pts[b], pts[c], pts[d]};
                        if (affine_dim(sub) == 3) {
                            ++independent;
                            CHECK(is_b_simplex(Simplex(sub)).has_value());
                        }
                    }
        CHECK(total == 15);
        CHECK(independent == 12);
    }
    SUBCASE("five-point flat border fails with a re-checkable counterexample") {
        PointConfig c(4, kFlatBorderExample);
        Verdict v = is_b_facet(c);
        CHECK_FALSE(v.holds);
        REQUIRE(v.counterexample.has_value());
        CHECK_FALSE(is_b_simplex(*v.counterexample).has_value());
        for (const Point& p : v.counterexample->vertices) CHECK(c.contains(p));
        // The subset dropping the apex point is independent and non-B as well.
        Simplex known({{0, 0, 1, 4}, {1, 1, 0, 3}, {1, 0, 2, 2}, {0, 1, 2, 2}});
        CHECK_FALSE(is_b_simplex(known).has_value());
    }
    SUBCASE("constructed B1 pyramid holds") {
        PointConfig c(4, kB1Instance);
        CHECK(c.positive_hyperplane().has_value());
        CHECK(is_b_facet(c).holds);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_WITH_AS(is_b_facet(PointConfig(4, {{0, 0, 0, 1}, {0, 0, 1, 0}})).holds,
                             "not a hyperplane configuration", GeometryError);
        CHECK_THROWS_WITH_AS(is_b_facet(PointConfig(2, {{0, 0}, {1, 1}})).holds,
                             "not a positive-covector configuration", GeometryError);
    }
}

TEST_CASE("is_b_polytope") {
    CHECK(is_b_polytope(PointConfig(1, {{0}, {1}})).holds);
    CHECK(is_b_polytope(PointConfig(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})).holds);
    Verdict v = is_b_polytope(PointConfig(2, {{0, 0}, {2, 0}, {2, 2}}));
    CHECK_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->vertices == std::vector<Point>{{2, 0}, {2, 2}});
    CHECK_THROWS_AS(is_b_polytope(PointConfig(2, {{0, 0}, {1, 1}})), GeometryError);
}

TEST_CASE("is_marked_b_simplex") {
    SUBCASE("unit segment with one marked vertex") {
        MarkedPolytope mp(PointConfig(1, {{0}, {1}}), {{{0}}});
        auto w = is_marked_b_simplex(mp, Simplex({{0}, {1}}));
        REQUIRE(w.has_value());
        CHECK(w->members == std::vector<Point>{{0}});
    }
    SUBCASE("unit square with bottom edge marked") {
        MarkedPolytope mp(PointConfig(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}), {{{0, 0}, {1, 0}}});
        auto w = is_marked_b_simplex(mp, Simplex({{0, 0}, {1, 0}, {0, 1}}));
        REQUIRE(w.has_value());
        CHECK(w->members == std::vector<Point>{{0, 0}, {1, 0}});
    }
    SUBCASE("tall triangle has no height-1 pyramid") {
        MarkedPolytope mp(PointConfig(2, {{0, 0}, {3, 0}, {0, 3}}), {{{0, 0}, {3, 0}}});
        CHECK_FALSE(is_marked_b_simplex(mp, Simplex({{0, 0}, {3, 0}, {0, 3}})).has_value());
    }
}

TEST_CASE("is_marked_b_polytope") {
    SUBCASE("length-2 segment fails even fully marked") {
        MarkedPolytope mp(PointConfig(1, {{0}, {2}}), {{{0}}, {{2}}});
        CHECK_FALSE(is_marked_b_polytope(mp).holds);
    }
    SUBCASE("unit square with both strip sides marked holds") {
        MarkedPolytope mp(PointConfig(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
                          {{{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}});
        CHECK(is_marked_b_polytope(mp).holds);
    }
    SUBCASE("flat border polygon with three marked sides holds") {
        MarkedPolytope mp(PointConfig(2, {{0, 0}, {3, 0}, {0, 1}, {1, 1}}),
                          {{{0, 0}, {3, 0}}, {{0, 0}, {0, 1}}, {{3, 0}, {1, 1}}});
        CHECK(is_marked_b_polytope(mp).holds);
    }
    SUBCASE("marked sets must be facets") {
        CHECK_THROWS_AS(MarkedPolytope(PointConfig(2, {{0, 0}, {1, 0}, {0, 1}}), {{{1, 0}, {0, 1}, {0, 0}}}),
                        GeometryError);
    }
}

TEST_CASE("permutation equivariance of B predicates") {
    auto gen = oracle::rng(808);
    std::uniform_int_distribution<Coord> val(0, 3);
    std::vector<std::vector<int>> perms = {{1, 0, 2, 3}, {3, 2, 1, 0}, {2, 3, 0, 1}};
    int tested = 0;
    while (tested < 60) {
        std::set<Point> pts;
        while (pts.size() < 5) {
            Point p(4);
            for (Coord& x : p) x = val(gen);
            pts.insert(p);
        }
        std::vector<Point> v(pts.begin(), pts.end());
        PointConfig c(4, v);
        if (c.dim() != 3 || !c.positive_hyperplane()) continue;
        ++tested;
        Verdict base = is_b_facet(c);
        for (const auto& perm : perms) {
            PointConfig cp(4, apply_perm(v, perm));
            CHECK(is_b_facet(cp).holds == base.holds);
        }
    }
}

TEST_CASE("counterexample soundness on random failing configs") {
    auto gen = oracle::rng(606);
    std::uniform_int_distribution<Coord> val(0, 4);
    int seen_failures = 0;
    for (int t = 0; t < 400 && seen_failures < 40; ++t) {
        std::set<Point> pts;
        while (pts.size() < 4) {
            Point p(2);
            for (Coord& x : p) x = val(gen);
            pts.insert(p);
        }
        PointConfig c(2, std::vector<Point>(pts.begin(), pts.end()));
        if (c.dim() != 2) continue;
        Verdict v = is_b_polytope(c);
        if (v.holds) continue;
        ++seen_failures;
        REQUIRE(v.counterexample.has_value());
        CHECK_FALSE(is_b_simplex(*v.counterexample).has_value());
        CHECK_FALSE(span_contains_origin(v.counterexample->vertices));
    }
    CHECK(seen_failures > 0);
}

TEST_CASE("1-D exhaustiveness at small bound") {
    const Coord M = 8;
    for (unsigned mask = 0; mask < (1u << (M + 1)); ++mask) {
        std::vector<Point> pts;
        for (Coord i = 0; i <= M; ++i)
            if (mask & (1u << i)) pts.push_back({i});
        if (pts.size() < 2) continue;
        PointConfig c(1, pts);
        bool expect = pts == std::vector<Point>{{0}, {1}};
        CHECK(is_b_polytope(c).holds == expect);

        auto facets = facets_of(c);
        for (unsigned mk = 0; mk < (1u << facets.size()); ++mk) {
            std::vector<std::vector<Point>> marked;
            for (std::size_t i = 0; i < facets.size(); ++i)
                if (mk & (1u << i)) marked.push_back(facets[i].members);
            MarkedPolytope mp(c, marked);
            bool expect_marked =
                pts.size() == 2 && pts[1][0] - pts[0][0] == 1 && !marked.empty();
            CHECK(is_marked_b_polytope(mp).holds == expect_marked);
        }
    }
}
