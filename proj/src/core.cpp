#include "bfacet/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bfacet {

Coord gcd_nonneg(Coord a, Coord b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        Coord t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Coord dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw GeometryError("dimension mismatch in dot product");
    Coord s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

Vec point_sub(const Point& p, const Point& q) {
    if (p.size() != q.size()) throw GeometryError("dimension mismatch in point difference");
    Vec d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = checked_sub(p[i], q[i]);
    return d;
}

std::pair<Vec, Coord> primitive(const Vec& v) {
    Coord g = 0;
    for (Coord x : v) g = gcd_nonneg(g, x);
    if (g == 0) throw GeometryError("zero vector");
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    for (Coord x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (Coord& y : w) y = checked_neg(y);
        break;
    }
    return {std::move(w), g};
}

int matrix_rank(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    for (const Vec& r : rows)
        if (r.size() != ncols) throw GeometryError("ragged matrix");
    std::size_t rank = 0;
    Coord prev = 1;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Coord num = checked_sub(checked_mul(rows[i][j], rows[rank][col]),
                                        checked_mul(rows[i][col], rows[rank][j]));
                rows[i][j] = num / prev;  // Bareiss: division is exact
            }
            rows[i][col] = 0;
        }
        prev = rows[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

int linear_rank(const std::vector<Point>& points) {
    return matrix_rank(std::vector<Vec>(points.begin(), points.end()));
}

int affine_dim(const std::vector<Point>& points) {
    if (points.empty()) throw GeometryError("affine dimension of empty set");
    std::vector<Vec> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(point_sub(points[i], points[0]));
    return matrix_rank(std::move(diffs));
}

bool span_contains_origin(const std::vector<Point>& points) {
    return linear_rank(points) == affine_dim(points);
}

std::vector<Vec> integer_kernel_basis(const std::vector<Vec>& rows, std::size_t width) {
    // Column reduction with a tracked unimodular transform: kernel basis
    // vectors are the transform columns over the zeroed-out columns.
    std::vector<Vec> m = rows;
    for (const Vec& r : m)
        if (r.size() != width) throw GeometryError("ragged matrix");
    std::vector<Vec> u(width, Vec(width, 0));
    for (std::size_t i = 0; i < width; ++i) u[i][i] = 1;  // u[i] is column i

    std::vector<bool> pivoted(width, false);
    auto col_sub = [&](std::size_t dst, std::size_t src, Coord q) {
        for (Vec& row : m) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
        for (std::size_t k = 0; k < width; ++k) u[dst][k] = checked_sub(u[dst][k], checked_mul(q, u[src][k]));
    };

    for (std::size_t r = 0; r < m.size(); ++r) {
        for (;;) {
            std::size_t best = width;
            for (std::size_t c = 0; c < width; ++c) {
                if (pivoted[c] || m[r][c] == 0) continue;
                if (best == width || checked_abs(m[r][c]) < checked_abs(m[r][best])) best = c;
            }
            if (best == width) break;
            bool reduced_any = false;
            for (std::size_t c = 0; c < width; ++c) {
                if (c == best || pivoted[c] || m[r][c] == 0) continue;
                Coord q = m[r][c] / m[r][best];
                if (q != 0) col_sub(c, best, q);
                if (m[r][c] != 0) reduced_any = true;
            }
            if (!reduced_any) {
                pivoted[best] = true;
                break;
            }
        }
    }

    std::vector<Vec> basis;
    for (std::size_t c = 0; c < width; ++c) {
        if (pivoted[c]) continue;
        bool zero = true;
        for (const Vec& row : m) zero = zero && row[c] == 0;
        if (zero) basis.push_back(u[c]);
    }
    return basis;
}

bool Hyperplane::all_positive() const {
    for (Coord a : covector)
        if (a <= 0) return false;
    return true;
}

Hyperplane normalize_hyperplane(Vec covector, Coord offset) {
    Coord g = 0;
    for (Coord x : covector) g = gcd_nonneg(g, x);
    if (g == 0) throw GeometryError("zero vector");
    if (offset % g != 0) throw GeometryError("non-integral hyperplane offset");
    Vec a(covector.size());
    for (std::size_t i = 0; i < covector.size(); ++i) a[i] = covector[i] / g;
    Coord b = offset / g;
    bool flip = b < 0;
    if (b == 0) {
        for (Coord x : a) {
            if (x == 0) continue;
            flip = x < 0;
            break;
        }
    }
    if (flip) {
        b = checked_neg(b);
        for (Coord& x : a) x = checked_neg(x);
    }
    return Hyperplane{std::move(a), b};
}

Hyperplane hyperplane_through(const std::vector<Point>& points) {
    if (points.empty()) throw GeometryError("not a hyperplane configuration");
    const std::size_t n = points[0].size();
    if (affine_dim(points) != static_cast<int>(n) - 1)
        throw GeometryError("not a hyperplane configuration");
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(point_sub(points[i], points[0]));
    std::vector<Vec> kernel = integer_kernel_basis(diffs, n);
    if (kernel.size() != 1) throw GeometryError("not a hyperplane configuration");
    Hyperplane h = normalize_hyperplane(kernel[0], dot(kernel[0], points[0]));
    for (const Point& p : points)
        if (!h.contains(p)) throw std::logic_error("hyperplane reconstruction failed");
    return h;
}

Hyperplane positive_hyperplane_of(const std::vector<Point>& points) {
    Hyperplane h = hyperplane_through(points);
    if (!h.all_positive()) throw GeometryError("not a positive-covector configuration");
    return h;
}

Coord lattice_height(const Point& p, const Hyperplane& h) { return checked_abs(h.eval(p)); }

Coord lattice_length(const Point& p, const Point& q) {
    Vec d = point_sub(q, p);
    Coord g = 0;
    for (Coord x : d) g = gcd_nonneg(g, x);
    if (g == 0) throw GeometryError("lattice length of a degenerate segment");
    return g;
}

Rational::Rational(Coord n, Coord d) : num_(n), den_(d) {
    if (den_ == 0) throw GeometryError("zero denominator");
    if (den_ < 0) {
        num_ = checked_neg(num_);
        den_ = checked_neg(den_);
    }
    Coord g = gcd_nonneg(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw GeometryError("division by zero rational");
    return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
}

bool Rational::operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

AffineSpan::AffineSpan(RationalPoint base_pt, std::vector<Vec> dirs)
    : base(std::move(base_pt)), directions(std::move(dirs)) {
    for (const Vec& d : directions)
        if (d.size() != base.size()) throw GeometryError("dimension mismatch in affine span");
    if (matrix_rank(directions) != static_cast<int>(directions.size()))
        throw GeometryError("dependent directions in affine span");
}

namespace {

// Clears denominators row-wise; row scaling preserves rank.
std::vector<Vec> scaled_integer_rows(const std::vector<std::vector<Rational>>& rows) {
    std::vector<Vec> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        Coord lcm = 1;
        for (const Rational& x : r) {
            Coord g = gcd_nonneg(lcm, x.den());
            lcm = checked_mul(lcm / g, x.den());
        }
        Vec v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            v[i] = checked_mul(r[i].num(), lcm / r[i].den());
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

bool AffineSpan::contains(const RationalPoint& p) const {
    if (p.size() != base.size()) throw GeometryError("dimension mismatch in affine span query");
    std::vector<std::vector<Rational>> rows;
    for (const Vec& d : directions) rows.emplace_back(d.begin(), d.end());
    std::vector<Rational> diff(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) diff[i] = p[i] - base[i];
    rows.push_back(diff);
    return matrix_rank(scaled_integer_rows(rows)) == static_cast<int>(directions.size());
}

bool AffineSpan::contains(const Point& p) const {
    return contains(RationalPoint(p.begin(), p.end()));
}

AffineSpan affine_span_of(const std::vector<Point>& points) {
    if (points.empty()) throw GeometryError("affine span of empty set");
    std::vector<Vec> dirs;
    for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(point_sub(points[i], points[0]));
    // Extract an independent subset in input order.
    std::vector<Vec> basis;
    for (const Vec& d : dirs) {
        basis.push_back(d);
        if (matrix_rank(basis) != static_cast<int>(basis.size())) basis.pop_back();
    }
    return AffineSpan(RationalPoint(points[0].begin(), points[0].end()), std::move(basis));
}

std::optional<std::vector<Rational>> solve_in_basis(const std::vector<Vec>& basis, const Vec& w) {
    const std::size_t k = basis.size();
    if (k == 0) {
        for (Coord x : w)
            if (x != 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    const std::size_t n = basis[0].size();
    // Gaussian elimination over the rationals on the transposed system.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = Rational(basis[j][i]);
        aug[i][k] = Rational(w[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_rows;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t p = row;
        while (p < n && aug[p][col] == Rational(0)) ++p;
        if (p == n) return std::nullopt;  // basis was independent, must pivot
        std::swap(aug[row], aug[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == Rational(0)) continue;
            Rational f = aug[i][col] / aug[row][col];
            for (std::size_t j = col; j <= k; ++j) aug[i][j] = aug[i][j] - f * aug[row][j];
        }
        pivot_rows.push_back(row);
        ++row;
    }
    std::vector<Rational> sol(k);
    for (std::size_t col = 0; col < k; ++col) sol[col] = aug[pivot_rows[col]][k] / aug[pivot_rows[col]][col];
    // Consistency on non-pivot rows.
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < k; ++j) acc = acc + sol[j] * Rational(basis[j][i]);
        if (!(acc == Rational(w[i]))) return std::nullopt;
    }
    return sol;
}

std::string format_point(const Point& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ')';
    return os.str();
}

std::string format_points(const std::vector<Point>& pts) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << format_point(pts[i]);
    }
    os << '}';
    return os.str();
}

}  // namespace bfacet
