#pragma once

// Exhaustive enumeration of positive-covector facet candidates at bounded
// scale, canonical-form deduplication, and the verification censuses. Work is
// partitioned by (covector, offset) pairs and merged deterministically, so
// identical bounds give identical reports at any parallelism degree.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bfacet/classifier.hpp"
#include "bfacet/reductions.hpp"

namespace bfacet {

struct CensusBounds {
    int n = 4;
    Coord max_covector = 1;   // entries of the primitive covector in [1, A]
    Coord max_offset = 3;     // offsets in [1, B]
    int max_points = 8;       // configurations of n+1 .. S points
    std::optional<Coord> coordinate_cap;

    void validate() const;
};

struct EnumerationStats {
    std::uint64_t raw_subsets = 0;     // subsets inspected across partitions
    std::uint64_t facet_dim_ok = 0;    // subsets of affine dimension n-1
    std::uint64_t unique_configs = 0;  // canonical forms after dedup
};

// Configurations with positive covector in canonical coordinate-permutation
// form, in a deterministic global order.
std::vector<PointConfig> enumerate_positive_hyperplane_configs(const CensusBounds& bounds, int jobs = 1,
                                                               EnumerationStats* stats = nullptr);

// The permutation image whose sorted point list is maximal: moves nonzero
// entries to the earliest coordinate slots (so {(0,0,0,5)} -> {(5,0,0,0)}).
PointConfig canonical_form_coord_perm(const PointConfig& config);

struct Violation {
    std::string check;
    std::vector<Point> config;
    std::string detail;

    bool operator<(const Violation& o) const {
        if (check != o.check) return check < o.check;
        if (config != o.config) return config < o.config;
        return detail < o.detail;
    }
};

struct CensusReport {
    std::string name;
    std::map<std::string, std::string> params;
    std::map<std::string, std::int64_t> totals;
    std::map<std::string, std::int64_t> counts;
    std::vector<Violation> violations;
    std::int64_t elapsed_ms = 0;

    bool ok() const { return violations.empty(); }
};

// Every B-facet found within bounds is B1, B2, flat border or the standard
// cross-polytope.
CensusReport verify_main_theorem(const CensusBounds& bounds, int jobs = 1);

// Every B1/B2/cross-polytope pattern match is a B-facet; flat borders occur
// both ways. `samples` adds randomized pattern instances beyond the census.
CensusReport verify_remark(const CensusBounds& bounds, int samples = 200, int jobs = 1);

// The unit-ray claim and the three V-face claims.
CensusReport verify_claims(const CensusBounds& bounds, int jobs = 1);

// Projections along coordinate subspaces whose intersection is a V-face but
// not a B-face are B-polytopes.
CensusReport verify_lemma_projection(const CensusBounds& bounds, int jobs = 1);

// Sections of pyramids with apex on a coordinate ray are marked B-polytopes;
// the biconditional is checked whenever tau minus the ray equals tau_H.
CensusReport verify_lemma_section(const CensusBounds& bounds, int jobs = 1);

struct TwoDBounds {
    Coord poly_cap = 4;      // grid [0, cap]^2 for the B-polytope lemma
    int poly_min_pts = 3;
    int poly_max_pts = 6;
    Coord marked_cap = 3;    // grid for the marked B-polygon lemma
    int marked_min_pts = 3;
    int marked_max_pts = 5;
    Coord one_d_max = 12;    // subsets of {0..M} for the 1-D claims
};

// Exhaustive biconditionals for the two-dimensional classifications plus the
// one-dimensional claims.
CensusReport verify_2d_lemmas(const TwoDBounds& bounds, int jobs = 1);

struct ExoticBounds {
    Coord a_max = 4;
    Coord star_max = 8;
};

struct ExoticInstance {
    std::string family;  // "pyramid" | "circuit"
    std::vector<Coord> params;
    PointConfig config;
};

// Instances of the two exotic flat-border families: template matches on a
// positive hyperplane, coplanarity where required, that are B-facets and are
// not B1 or B2 patterns.
std::vector<ExoticInstance> find_exotic_instances(const ExoticBounds& bounds);

// Points of {x >= 0 : a.x = b} in lexicographic order.
std::vector<Point> hyperplane_points(const Vec& covector, Coord offset, std::optional<Coord> cap);

}  // namespace bfacet
