#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// rational-elimination rank, brute-force support-functional face search, and
// a literal re-rooted internal-V-face computation.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "bfacet/core.hpp"

namespace oracle {

using bfacet::Coord;
using bfacet::Point;
using bfacet::Vec;

// Rank by plain fraction arithmetic (long double-free, exact): row-reduce
// over rationals represented as num/den pairs of long long.
inline int rational_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    struct Q {
        long long n, d;
    };
    auto norm = [](Q q) {
        if (q.d < 0) {
            q.n = -q.n;
            q.d = -q.d;
        }
        long long g = std::__gcd(q.n < 0 ? -q.n : q.n, q.d);
        if (g > 1) {
            q.n /= g;
            q.d /= g;
        }
        return q;
    };
    std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<Q>> a(rows, std::vector<Q>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Q{m[i][j], 1};
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col].n == 0) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].n == 0) continue;
            // a[i] -= f * a[rank], f = a[i][col] / a[rank][col]
            Q f = norm(Q{a[i][col].n * a[rank][col].d, a[i][col].d * a[rank][col].n});
            for (std::size_t j = col; j < cols; ++j) {
                Q prod = norm(Q{f.n * a[rank][j].n, f.d * a[rank][j].d});
                Q diff{a[i][j].n * prod.d - prod.n * a[i][j].d, a[i][j].d * prod.d};
                a[i][j] = norm(diff);
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

inline int rational_affine_dim(const std::vector<Point>& pts) {
    std::vector<std::vector<long long>> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<long long> d(pts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return rational_rank(diffs);
}

// All distinct proper faces found by maximizing every integer functional with
// entries in [-bound, bound], as member point sets. Complete only when the
// bound dominates the configuration's facet normals; adequate for the small
// frozen instances it is used on.
inline std::set<std::vector<Point>> support_grid_faces(const std::vector<Point>& pts, Coord bound) {
    std::set<std::vector<Point>> found;
    const std::size_t n = pts[0].size();
    Vec w(n, -bound);
    for (;;) {
        bool nonzero = false;
        for (Coord x : w) nonzero = nonzero || x != 0;
        if (nonzero) {
            Coord best = 0;
            bool first = true;
            for (const Point& p : pts) {
                Coord v = 0;
                for (std::size_t i = 0; i < n; ++i) v += w[i] * p[i];
                if (first || v > best) {
                    best = v;
                    first = false;
                }
            }
            std::vector<Point> face;
            for (const Point& p : pts) {
                Coord v = 0;
                for (std::size_t i = 0; i < n; ++i) v += w[i] * p[i];
                if (v == best) face.push_back(p);
            }
            std::sort(face.begin(), face.end());
            if (face.size() < pts.size()) found.insert(face);
        }
        std::size_t i = 0;
        while (i < n && w[i] == bound) w[i++] = -bound;
        if (i == n) break;
        ++w[i];
    }
    return found;
}

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

}  // namespace oracle
