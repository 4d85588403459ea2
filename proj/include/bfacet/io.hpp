#pragma once

// Point-set files:
//   dim <n>
//   <n space-separated nonnegative integers per point line>
//   mark <i1> <i2> ... (optional; 1-based indices of the members of a marked
//                       facet, in point order)
// Blank lines and lines starting with '#' are ignored.

#include <iosfwd>
#include <string>
#include <vector>

#include "bfacet/predicates.hpp"

namespace bfacet {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointSetFile {
    int dim = 0;
    std::vector<Point> points;                       // in file order
    std::vector<std::vector<std::size_t>> marks;     // 0-based indices into points

    PointConfig to_config() const;
    // validates that every mark names an actual facet
    MarkedPolytope to_marked_polytope() const;
    bool has_marks() const { return !marks.empty(); }
};

PointSetFile parse_point_set(std::istream& in);
PointSetFile load_point_set(const std::string& path);
std::string write_point_set(const PointSetFile& file);

}  // namespace bfacet
