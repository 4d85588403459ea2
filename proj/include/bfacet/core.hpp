#pragma once

// Exact integer and rational affine geometry: spans, ranks, hyperplanes,
// lattice heights and lengths. Everything here is overflow-checked; no
// floating point anywhere.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bfacet {

using Coord = long long;
using Point = std::vector<Coord>;  // lattice point (or chart coordinates)
using Vec = std::vector<Coord>;    // difference vector / covector

// Raised when exact integer arithmetic would wrap. Maps to exit code 3.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised on violated geometric preconditions ("not a hyperplane
// configuration", "lemma hypothesis violated", ...). Maps to exit code 2.
struct GeometryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Coord checked_add(Coord a, Coord b) {
    Coord r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Coord checked_sub(Coord a, Coord b) {
    Coord r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Coord checked_mul(Coord a, Coord b) {
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Coord checked_neg(Coord a) {
    if (a == std::numeric_limits<long long>::min()) throw OverflowError("integer overflow in negation");
    return -a;
}

inline Coord checked_abs(Coord a) { return a < 0 ? checked_neg(a) : a; }

Coord gcd_nonneg(Coord a, Coord b);

// Exact dot product.
Coord dot(const Vec& a, const Vec& b);

Vec point_sub(const Point& p, const Point& q);

// (v/g, g) with g = gcd of |entries|, result sign-normalized so its first
// nonzero entry is positive. Errors on the zero vector.
std::pair<Vec, Coord> primitive(const Vec& v);

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int matrix_rank(std::vector<Vec> rows);

// Rank of the set of points seen as vectors from the origin.
int linear_rank(const std::vector<Point>& points);

// Dimension of the affine hull; 0 for a single point. Errors on empty input.
int affine_dim(const std::vector<Point>& points);

// true iff the origin lies in the affine span of the points.
bool span_contains_origin(const std::vector<Point>& points);

// Basis of the integer kernel {x : M x = 0} of an r x c matrix, as a list of
// primitive basis vectors of the (saturated) kernel lattice. Deterministic.
std::vector<Vec> integer_kernel_basis(const std::vector<Vec>& rows, std::size_t width);

// Primitive integer covector plus offset. Normalized so offset >= 0, and if
// the offset is 0 the first nonzero covector entry is positive.
struct Hyperplane {
    Vec covector;
    Coord offset = 0;

    Coord eval(const Point& p) const { return checked_sub(dot(covector, p), offset); }
    bool contains(const Point& p) const { return eval(p) == 0; }
    bool all_positive() const;
    bool operator==(const Hyperplane& o) const = default;
};

Hyperplane normalize_hyperplane(Vec covector, Coord offset);

// Unique primitive hyperplane through a configuration of affine dimension
// n-1. Errors with "not a hyperplane configuration" otherwise.
Hyperplane hyperplane_through(const std::vector<Point>& points);

// hyperplane_through, accepted only when every covector entry is strictly
// positive; errors with "not a positive-covector configuration" otherwise.
Hyperplane positive_hyperplane_of(const std::vector<Point>& points);

// |a.p - b| for a primitive hyperplane.
Coord lattice_height(const Point& p, const Hyperplane& h);

// gcd of |q - p| entries: the number of lattice subsegments. Errors if p == q.
Coord lattice_length(const Point& p, const Point& q);

// Exact rational with normalized sign (den > 0) and gcd-reduced terms.
class Rational {
public:
    Rational() = default;
    Rational(Coord n) : num_(n), den_(1) {}
    Rational(Coord n, Coord d);

    Coord num() const { return num_; }
    Coord den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational& o) const;

private:
    Coord num_ = 0;
    Coord den_ = 1;
};

using RationalPoint = std::vector<Rational>;

// Affine subspace with a rational basepoint and independent lattice
// directions; dimension equals the number of directions.
struct AffineSpan {
    RationalPoint base;
    std::vector<Vec> directions;

    AffineSpan() = default;
    AffineSpan(RationalPoint base_pt, std::vector<Vec> dirs);

    std::size_t ambient_dim() const { return base.size(); }
    std::size_t dim() const { return directions.size(); }
    bool contains(const Point& p) const;
    bool contains(const RationalPoint& p) const;
};

AffineSpan affine_span_of(const std::vector<Point>& points);

// Coordinates of w in the given independent integer basis, if w lies in its
// rational span.
std::optional<std::vector<Rational>> solve_in_basis(const std::vector<Vec>& basis, const Vec& w);

std::string format_point(const Point& p);
std::string format_points(const std::vector<Point>& pts);

}  // namespace bfacet
