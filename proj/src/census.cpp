#include "bfacet/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace bfacet {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Deterministic parallel map: results are collected by task index, so the
// merge below is independent of scheduling.
template <typename R, typename Fn>
std::vector<R> run_indexed(std::size_t tasks, int jobs, Fn&& fn) {
    std::vector<R> out(tasks);
    if (jobs <= 1 || tasks <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int threads = std::min<int>(jobs, static_cast<int>(tasks));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

struct ChunkOut {
    std::map<std::string, std::int64_t> counts;
    std::vector<Violation> violations;
};

void merge_chunks(const std::vector<ChunkOut>& chunks, CensusReport& report) {
    for (const ChunkOut& c : chunks) {
        for (const auto& [k, v] : c.counts) report.counts[k] += v;
        report.violations.insert(report.violations.end(), c.violations.begin(), c.violations.end());
    }
}

// Bareiss rank on a reusable scratch buffer (row-major, n columns).
int affine_rank_fast(const std::vector<Point>& pts, const std::size_t* idx, std::size_t k,
                     std::vector<Coord>& scratch) {
    const std::size_t n = pts[idx[0]].size();
    const std::size_t rows = k - 1;
    scratch.resize(rows * n);
    auto m = [&](std::size_t i, std::size_t j) -> Coord& { return scratch[i * n + j]; };
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = checked_sub(pts[idx[i + 1]][j], pts[idx[0]][j]);
    std::size_t rank = 0;
    Coord prev = 1;
    for (std::size_t col = 0; col < n && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(rank, j));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                m(i, j) = checked_sub(checked_mul(m(i, j), m(rank, col)), checked_mul(m(i, col), m(rank, j))) / prev;
            m(i, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return static_cast<int>(rank);
}

struct Partition {
    Vec covector;
    Coord offset = 0;
};

std::vector<Partition> census_partitions(const CensusBounds& bounds) {
    std::vector<Vec> covectors;
    Vec cur(bounds.n);
    // non-decreasing entries: one representative per covector orbit
    std::function<void(int, Coord)> rec = [&](int i, Coord lo) {
        if (i == bounds.n) {
            Coord g = 0;
            for (Coord x : cur) g = gcd_nonneg(g, x);
            if (g == 1) covectors.push_back(cur);
            return;
        }
        for (Coord v = lo; v <= bounds.max_covector; ++v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, 1);
    std::vector<Partition> parts;
    for (const Vec& a : covectors)
        for (Coord b = 1; b <= bounds.max_offset; ++b) parts.push_back(Partition{a, b});
    return parts;
}

struct PartOut {
    std::vector<PointConfig> configs;
    std::uint64_t raw = 0;
    std::uint64_t dim_ok = 0;
};

PartOut process_partition(const CensusBounds& bounds, const Partition& part) {
    PartOut out;
    const int n = bounds.n;
    std::vector<Point> pts = hyperplane_points(part.covector, part.offset, bounds.coordinate_cap);
    if (static_cast<int>(pts.size()) < n + 1) return out;

    // index action of the covector's stabilizer on the point list
    std::vector<std::vector<std::size_t>> stab_maps;
    for (const auto& perm : coordinate_permutations(n)) {
        bool identity = true, stabilizes = true;
        for (int i = 0; i < n; ++i) {
            identity = identity && perm[i] == i;
            stabilizes = stabilizes && part.covector[perm[i]] == part.covector[i];
        }
        if (identity || !stabilizes) continue;
        std::vector<std::size_t> map(pts.size());
        for (std::size_t t = 0; t < pts.size(); ++t) {
            Point img(n);
            for (int i = 0; i < n; ++i) img[i] = pts[t][perm[i]];
            auto it = std::lower_bound(pts.begin(), pts.end(), img);
            if (it == pts.end() || *it != img) throw std::logic_error("stabilizer does not preserve the slice");
            map[t] = static_cast<std::size_t>(it - pts.begin());
        }
        stab_maps.push_back(std::move(map));
    }

    const std::size_t max_k = std::min<std::size_t>(bounds.max_points, pts.size());
    std::vector<std::size_t> idx(max_k);
    std::vector<std::size_t> mapped(max_k);
    std::vector<Coord> scratch;
    for (std::size_t k = static_cast<std::size_t>(n) + 1; k <= max_k; ++k) {
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            ++out.raw;
            if (affine_rank_fast(pts, idx.data(), k, scratch) == n - 1) {
                ++out.dim_ok;
                bool rep = true;
                for (const auto& map : stab_maps) {
                    for (std::size_t i = 0; i < k; ++i) mapped[i] = map[idx[i]];
                    std::sort(mapped.begin(), mapped.begin() + static_cast<std::ptrdiff_t>(k));
                    if (std::lexicographical_compare(mapped.begin(), mapped.begin() + static_cast<std::ptrdiff_t>(k),
                                                     idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k))) {
                        rep = false;
                        break;
                    }
                }
                if (rep) {
                    std::vector<Point> sub;
                    sub.reserve(k);
                    for (std::size_t i = 0; i < k; ++i) sub.push_back(pts[idx[i]]);
                    out.configs.push_back(canonical_form_coord_perm(PointConfig(n, std::move(sub))));
                }
            }
            std::size_t i = k;
            bool done = true;
            while (i > 0) {
                --i;
                if (idx[i] != i + pts.size() - k) {
                    done = false;
                    break;
                }
            }
            if (done) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

void fill_bounds_params(const CensusBounds& bounds, CensusReport& report) {
    report.params["n"] = std::to_string(bounds.n);
    report.params["max_covector"] = std::to_string(bounds.max_covector);
    report.params["max_offset"] = std::to_string(bounds.max_offset);
    report.params["max_points"] = std::to_string(bounds.max_points);
    if (bounds.coordinate_cap) report.params["coordinate_cap"] = std::to_string(*bounds.coordinate_cap);
}

// Shared driver: enumerate, then run a per-configuration check over chunks.
template <typename Fn>
CensusReport run_config_census(const std::string& name, const CensusBounds& bounds, int jobs, Fn per_config) {
    auto start = Clock::now();
    CensusReport report;
    report.name = name;
    fill_bounds_params(bounds, report);

    EnumerationStats stats;
    std::vector<PointConfig> configs = enumerate_positive_hyperplane_configs(bounds, jobs, &stats);
    report.totals["raw_subsets"] = static_cast<std::int64_t>(stats.raw_subsets);
    report.totals["facet_dim_subsets"] = static_cast<std::int64_t>(stats.facet_dim_ok);
    report.totals["unique_configs"] = static_cast<std::int64_t>(stats.unique_configs);

    const std::size_t chunk = std::max<std::size_t>(std::size_t(1), configs.size() / (static_cast<std::size_t>(std::max(jobs, 1)) * 16) + 1);
    const std::size_t tasks = (configs.size() + chunk - 1) / chunk;
    std::vector<ChunkOut> outs = run_indexed<ChunkOut>(tasks, jobs, [&](std::size_t t) {
        ChunkOut out;
        std::size_t lo = t * chunk, hi = std::min(configs.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) per_config(configs[i], out);
        return out;
    });
    merge_chunks(outs, report);
    std::sort(report.violations.begin(), report.violations.end());
    report.elapsed_ms = ms_since(start);
    return report;
}

const char* facet_tag_name(FacetTag tag) {
    switch (tag) {
        case FacetTag::B1: return "B1";
        case FacetTag::B2: return "B2";
        case FacetTag::FlatBorder: return "FlatBorder";
        case FacetTag::CrossPolytope: return "CrossPolytope";
        default: return "Unclassified";
    }
}

bool is_unit_ray_point(const Point& p) {
    int nonzero = 0;
    bool unit = false;
    for (Coord x : p)
        if (x != 0) {
            ++nonzero;
            unit = x == 1;
        }
    return nonzero == 1 && unit;
}

}  // namespace

void CensusBounds::validate() const {
    if (n < 1) throw GeometryError("census dimension must be positive");
    if (max_covector < 1 || max_offset < 1) throw GeometryError("census bounds must be positive");
    if (max_points < n + 1) throw GeometryError("census needs at least n+1 points per configuration");
    if (coordinate_cap && *coordinate_cap < 0) throw GeometryError("negative coordinate cap");
}

std::vector<Point> hyperplane_points(const Vec& covector, Coord offset, std::optional<Coord> cap) {
    const std::size_t n = covector.size();
    for (Coord a : covector)
        if (a <= 0) throw GeometryError("covector entries must be positive");
    std::vector<Point> out;
    Point cur(n, 0);
    std::function<void(std::size_t, Coord)> rec = [&](std::size_t i, Coord rem) {
        if (i + 1 == n) {
            if (rem % covector[i] == 0) {
                Coord v = rem / covector[i];
                if (!cap || v <= *cap) {
                    cur[i] = v;
                    out.push_back(cur);
                }
            }
            return;
        }
        Coord hi = rem / covector[i];
        if (cap) hi = std::min(hi, *cap);
        for (Coord v = 0; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1, rem - covector[i] * v);
        }
    };
    if (n > 0) rec(0, offset);
    return out;
}

PointConfig canonical_form_coord_perm(const PointConfig& config) {
    const int n = config.ambient_dim();
    std::vector<Point> best;
    for (const auto& perm : coordinate_permutations(n)) {
        std::vector<Point> image;
        image.reserve(config.size());
        for (const Point& p : config.points()) {
            Point q(p.size());
            for (int i = 0; i < n; ++i) q[i] = p[perm[i]];
            image.push_back(std::move(q));
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image > best) best = std::move(image);
    }
    return PointConfig(n, std::move(best));
}

std::vector<PointConfig> enumerate_positive_hyperplane_configs(const CensusBounds& bounds, int jobs,
                                                               EnumerationStats* stats) {
    bounds.validate();
    std::vector<Partition> parts = census_partitions(bounds);
    std::vector<PartOut> outs =
        run_indexed<PartOut>(parts.size(), jobs, [&](std::size_t i) { return process_partition(bounds, parts[i]); });

    EnumerationStats agg;
    std::vector<PointConfig> configs;
    for (PartOut& p : outs) {
        agg.raw_subsets += p.raw;
        agg.facet_dim_ok += p.dim_ok;
        for (PointConfig& c : p.configs) configs.push_back(std::move(c));
    }
    std::sort(configs.begin(), configs.end());
    configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
    agg.unique_configs = configs.size();
    if (stats) *stats = agg;
    return configs;
}

CensusReport verify_main_theorem(const CensusBounds& bounds, int jobs) {
    if (bounds.n != 4) throw GeometryError("the classification census requires dimension 4");
    return run_config_census("theorem", bounds, jobs, [](const PointConfig& cfg, ChunkOut& out) {
        Verdict v = is_b_facet(cfg);
        FacetClass cls = classify_facet(cfg);
        std::string key = std::string(facet_tag_name(cls.tag)) + (v.holds ? "|b_facet" : "|not_b_facet");
        ++out.counts[key];
        if (v.holds) {
            ++out.counts["b_facets"];
            if (cls.tag == FacetTag::Unclassified)
                out.violations.push_back(
                    Violation{"theorem", cfg.points(), "B-facet matches none of the four classes"});
        }
    });
}

namespace {

void sample_remark_patterns(int samples, ChunkOut& out) {
    std::mt19937_64 gen(0x5EC7AB1E);
    auto rnd = [&](Coord lo, Coord hi) { return lo + static_cast<Coord>(gen() % (hi - lo + 1)); };

    int made_b1 = 0, attempts = 0;
    while (made_b1 < samples && attempts < samples * 100) {
        ++attempts;
        Vec a(4);
        for (Coord& x : a) x = rnd(1, 3);
        Coord b = rnd(2, 7);
        std::vector<Point> pts = hyperplane_points(a, b, std::nullopt);
        std::size_t axis = static_cast<std::size_t>(gen() % 4);
        std::vector<Point> base, apexes;
        for (const Point& p : pts) {
            if (p[axis] == 0) base.push_back(p);
            if (p[axis] == 1) apexes.push_back(p);
        }
        if (base.size() < 4 || apexes.empty()) continue;
        for (std::size_t i = base.size(); i > 1; --i) std::swap(base[i - 1], base[gen() % i]);
        std::size_t take = 4 + static_cast<std::size_t>(gen() % 3);
        base.resize(std::min(base.size(), take));
        base.push_back(apexes[gen() % apexes.size()]);
        std::set<Point> uniq(base.begin(), base.end());
        if (uniq.size() < 5) continue;
        PointConfig cfg(4, std::vector<Point>(uniq.begin(), uniq.end()));
        if (cfg.dim() != 3 || !cfg.positive_hyperplane() || !match_b1(cfg)) continue;
        ++made_b1;
        ++out.counts["sampled_b1"];
        if (!is_b_facet(cfg).holds)
            out.violations.push_back(Violation{"remark_sample", cfg.points(), "sampled B1 pattern is not a B-facet"});
    }

    int made_b2 = 0;
    attempts = 0;
    while (made_b2 < samples && attempts < samples * 100) {
        ++attempts;
        Vec a(4);
        for (Coord& x : a) x = rnd(1, 3);
        Coord b = rnd(2, 7);
        std::vector<Point> pts = hyperplane_points(a, b, std::nullopt);
        std::size_t i = static_cast<std::size_t>(gen() % 4), j = static_cast<std::size_t>(gen() % 4);
        if (i == j) continue;
        std::vector<Point> strip;
        for (const Point& p : pts) {
            Coord x = p[i], y = p[j];
            if ((x == 0 && y == 0) || (x == 1 && y == 0) || (x == 0 && y == 1)) strip.push_back(p);
        }
        if (strip.size() < 5) continue;
        for (std::size_t t = strip.size(); t > 1; --t) std::swap(strip[t - 1], strip[gen() % t]);
        strip.resize(5 + gen() % std::min<std::size_t>(strip.size() - 4, 3));
        std::set<Point> uniq(strip.begin(), strip.end());
        if (uniq.size() < 5) continue;
        PointConfig cfg(4, std::vector<Point>(uniq.begin(), uniq.end()));
        if (cfg.dim() != 3 || !cfg.positive_hyperplane() || !match_b2(cfg)) continue;
        ++made_b2;
        ++out.counts["sampled_b2"];
        if (!is_b_facet(cfg).holds)
            out.violations.push_back(Violation{"remark_sample", cfg.points(), "sampled B2 pattern is not a B-facet"});
    }

    static const std::vector<Point> cross = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                             {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
    for (const auto& perm : coordinate_permutations(4)) {
        PointConfig cfg = apply_coordinate_permutation(PointConfig(4, cross), perm);
        ++out.counts["sampled_cross"];
        if (!is_b_facet(cfg).holds)
            out.violations.push_back(Violation{"remark_sample", cfg.points(), "permuted cross-polytope is not a B-facet"});
    }
}

}  // namespace

CensusReport verify_remark(const CensusBounds& bounds, int samples, int jobs) {
    if (bounds.n != 4) throw GeometryError("the classification census requires dimension 4");
    CensusReport report =
        run_config_census("remark", bounds, jobs, [](const PointConfig& cfg, ChunkOut& out) {
            bool b1 = match_b1(cfg).has_value();
            bool b2 = match_b2(cfg).has_value();
            bool cross = match_cross_polytope(cfg).has_value();
            bool bf = is_b_facet(cfg).holds;
            if (b1) ++out.counts["matched_b1"];
            if (b2) ++out.counts["matched_b2"];
            if (cross) ++out.counts["matched_cross"];
            if ((b1 || b2 || cross) && !bf) {
                std::string which = b1 ? "B1" : (b2 ? "B2" : "cross-polytope");
                out.violations.push_back(
                    Violation{"remark", cfg.points(), which + " pattern that is not a B-facet"});
            }
            if (match_flat_border(cfg))
                ++out.counts[bf ? "flat_border_b_facet" : "flat_border_not_b_facet"];
        });
    ChunkOut sampled;
    sample_remark_patterns(samples, sampled);
    for (const auto& [k, v] : sampled.counts) report.counts[k] += v;
    report.violations.insert(report.violations.end(), sampled.violations.begin(), sampled.violations.end());
    if (report.counts["flat_border_b_facet"] == 0)
        report.violations.push_back(Violation{"remark_existence", {}, "no flat-border B-facet within bounds"});
    if (report.counts["flat_border_not_b_facet"] == 0)
        report.violations.push_back(Violation{"remark_existence", {}, "no flat-border non-B-facet within bounds"});
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

CensusReport verify_claims(const CensusBounds& bounds, int jobs) {
    return run_config_census("claims", bounds, jobs, [n = bounds.n](const PointConfig& cfg, ChunkOut& out) {
        std::vector<Face> faces = enumerate_faces(cfg);
        bool bf = is_b_facet(cfg).holds;

        if (bf) {
            for (const Point& p : cfg.points()) {
                if (!is_unit_ray_point(p)) continue;
                ++out.counts["unit_ray_b_facets"];
                if (!match_b1(cfg))
                    out.violations.push_back(
                        Violation{"claim_unit_ray", cfg.points(), "B-facet with unit ray point is not B1"});
                break;
            }
        }

        std::vector<char> vflag(faces.size());
        std::size_t improper = faces.size();
        for (std::size_t i = 0; i < faces.size(); ++i) {
            vflag[i] = is_v_face(faces[i], n);
            if (faces[i].members.size() == cfg.size()) improper = i;
        }
        if (improper == faces.size() || !vflag[improper])
            out.violations.push_back(Violation{"claim_facet_v", cfg.points(), "facet is not a V-face"});

        std::vector<std::size_t> internal = internal_v_face_indices(faces, n);
        std::vector<char> internal_flag(faces.size(), 0);
        for (std::size_t i : internal) internal_flag[i] = 1;
        out.counts["v_faces"] += static_cast<std::int64_t>(std::count(vflag.begin(), vflag.end(), 1));
        out.counts["internal_v_faces"] += static_cast<std::int64_t>(internal.size());

        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (!vflag[i]) continue;
            bool has_internal = false;
            for (std::size_t j : internal) {
                if (faces[j].members.size() > faces[i].members.size()) continue;
                if (std::includes(faces[i].members.begin(), faces[i].members.end(), faces[j].members.begin(),
                                  faces[j].members.end())) {
                    has_internal = true;
                    break;
                }
            }
            if (!has_internal)
                out.violations.push_back(
                    Violation{"claim_internal_exists", cfg.points(),
                              "V-face " + format_points(faces[i].members) + " contains no internal V-face"});
        }

        for (std::size_t i : internal) {
            const Face& f = faces[i];
            if (f.dim == 0 && is_unit_ray_point(f.members[0])) continue;  // covered by the unit-ray claim
            std::vector<std::size_t> supp;
            for (int c = 0; c < n; ++c) {
                bool nonzero = false;
                for (const Point& p : f.members) nonzero = nonzero || p[c] != 0;
                if (nonzero) supp.push_back(static_cast<std::size_t>(c));
            }
            const std::size_t want = static_cast<std::size_t>(f.dim) + 1;
            std::vector<std::size_t> extra;
            for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c)
                if (!std::binary_search(supp.begin(), supp.end(), c)) extra.push_back(c);
            // every coordinate subspace of dimension dim+1 containing the face
            std::vector<std::size_t> chosen;
            std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t need) {
                if (need == 0) {
                    std::vector<std::size_t> axes = supp;
                    axes.insert(axes.end(), chosen.begin(), chosen.end());
                    std::sort(axes.begin(), axes.end());
                    std::vector<Point> restricted;
                    for (const Point& p : f.members) {
                        Point q;
                        for (std::size_t c : axes) q.push_back(p[c]);
                        restricted.push_back(std::move(q));
                    }
                    ++out.counts["internal_subspace_checks"];
                    PointConfig sub(static_cast<int>(axes.size()), restricted);
                    if (sub.dim() == static_cast<int>(axes.size()) - 1 && sub.positive_hyperplane() &&
                        is_b_facet(sub).holds)
                        out.violations.push_back(
                            Violation{"claim_internal_not_b", cfg.points(),
                                      "internal V-face " + format_points(f.members) +
                                          " is a B-facet in its coordinate subspace"});
                    return;
                }
                for (std::size_t t = from; t < extra.size(); ++t) {
                    chosen.push_back(extra[t]);
                    pick(t + 1, need - 1);
                    chosen.pop_back();
                }
            };
            if (supp.size() <= want && want <= static_cast<std::size_t>(n)) pick(0, want - supp.size());
        }
    });
}

CensusReport verify_lemma_projection(const CensusBounds& bounds, int jobs) {
    return run_config_census("projection", bounds, jobs, [n = bounds.n](const PointConfig& cfg, ChunkOut& out) {
        if (!is_b_facet(cfg).holds) return;
        ++out.counts["b_facets"];
        std::vector<Face> faces = enumerate_faces(cfg);
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<std::size_t> axes;
            for (int c = 0; c < n; ++c)
                if (mask & (1u << c)) axes.push_back(static_cast<std::size_t>(c));
            CoordinateSubspace e(axes);
            std::vector<Point> fe = intersect_with_subspace(cfg, e);
            if (fe.empty()) continue;
            // E must witness the V-property: dim(E ∩ tau) = dim(E) - 1
            if (affine_dim(fe) != static_cast<int>(e.dim()) - 1) continue;
            const Face* face = nullptr;
            for (const Face& f : faces)
                if (f.members == fe) face = &f;
            if (face == nullptr) continue;
            if (!is_v_face(*face, n)) continue;
            if (is_b_face(cfg, *face)) continue;
            ++out.counts["projection_checks"];
            bool ok = false;
            std::string detail;
            try {
                ok = is_b_polytope(project(cfg, e)).holds;
                detail = "projection is not a B-polytope";
            } catch (const GeometryError& err) {
                detail = std::string("projection rejected: ") + err.what();
            }
            if (!ok)
                out.violations.push_back(Violation{"projection", cfg.points(),
                                                   detail + " (axes mask " + std::to_string(mask) + ")"});
        }
    });
}

CensusReport verify_lemma_section(const CensusBounds& bounds, int jobs) {
    return run_config_census("section", bounds, jobs, [](const PointConfig& cfg, ChunkOut& out) {
        bool bf = is_b_facet(cfg).holds;
        for (const Point& q : cfg.points()) {
            std::size_t axis = q.size();
            int nonzero = 0;
            for (std::size_t c = 0; c < q.size(); ++c)
                if (q[c] != 0) {
                    axis = c;
                    ++nonzero;
                }
            if (nonzero != 1) continue;
            std::optional<SectionResult> section;
            try {
                section = section_from_apex_detail(cfg, q);
            } catch (const GeometryError&) {
                continue;  // lemma hypotheses not met for this apex
            }
            ++out.counts["sections"];
            bool marked_ok = is_marked_b_polytope(section->marked).holds;
            if (bf && !marked_ok)
                out.violations.push_back(Violation{"section_forward", cfg.points(),
                                                   "B-facet section from apex " + format_point(q) +
                                                       " is not a marked B-polytope"});
            std::vector<Point> tau_minus_e;
            for (const Point& p : cfg.points()) {
                bool on_ray = true;
                for (std::size_t c = 0; c < p.size(); ++c)
                    if (p[c] != 0 && c != axis) on_ray = false;
                if (!on_ray) tau_minus_e.push_back(p);
            }
            if (tau_minus_e == section->tau_h) {
                ++out.counts["biconditional_checks"];
                if (marked_ok != bf)
                    out.violations.push_back(Violation{"section_biconditional", cfg.points(),
                                                       std::string("marked verdict ") +
                                                           (marked_ok ? "holds" : "fails") +
                                                           " but facet verdict " + (bf ? "holds" : "fails")});
            }
        }
    });
}

namespace {

std::vector<Point> square_grid(Coord cap) {
    std::vector<Point> grid;
    for (Coord x = 0; x <= cap; ++x)
        for (Coord y = 0; y <= cap; ++y) grid.push_back({x, y});
    return grid;
}

// subsets of `grid` of the given sizes whose first element index is `first`
template <typename Fn>
void for_each_subset_from(const std::vector<Point>& grid, std::size_t first, int min_pts, int max_pts, Fn fn) {
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        int size = static_cast<int>(idx.size()) + 1;
        if (size >= min_pts && size <= max_pts) {
            std::vector<Point> pts = {grid[first]};
            for (std::size_t i : idx) pts.push_back(grid[i]);
            fn(pts);
        }
        if (size >= max_pts) return;
        for (std::size_t t = from; t < grid.size(); ++t) {
            idx.push_back(t);
            rec(t + 1);
            idx.pop_back();
        }
    };
    rec(first + 1);
}

}  // namespace

CensusReport verify_2d_lemmas(const TwoDBounds& bounds, int jobs) {
    auto start = Clock::now();
    CensusReport report;
    report.name = "2d";
    report.params["poly_cap"] = std::to_string(bounds.poly_cap);
    report.params["poly_points"] = std::to_string(bounds.poly_min_pts) + ".." + std::to_string(bounds.poly_max_pts);
    report.params["marked_cap"] = std::to_string(bounds.marked_cap);
    report.params["marked_points"] =
        std::to_string(bounds.marked_min_pts) + ".." + std::to_string(bounds.marked_max_pts);
    report.params["one_d_max"] = std::to_string(bounds.one_d_max);

    {
        std::vector<Point> grid = square_grid(bounds.poly_cap);
        std::vector<ChunkOut> outs = run_indexed<ChunkOut>(grid.size(), jobs, [&](std::size_t first) {
            ChunkOut out;
            for_each_subset_from(grid, first, bounds.poly_min_pts, bounds.poly_max_pts,
                                 [&](const std::vector<Point>& pts) {
                                     PointConfig cfg(2, pts);
                                     if (cfg.dim() != 2) return;
                                     ++out.counts["polytope_configs"];
                                     bool brute = is_b_polytope(cfg).holds;
                                     bool classed =
                                         classify_b_polytope_2d(cfg).tag != Polytope2DTag::NotBPolytope;
                                     if (brute) ++out.counts["b_polytopes"];
                                     if (brute != classed)
                                         out.violations.push_back(Violation{
                                             "polytope_2d", cfg.points(),
                                             std::string("predicate ") + (brute ? "holds" : "fails") +
                                                 " but classification " + (classed ? "matches" : "matches nothing")});
                                 });
            return out;
        });
        merge_chunks(outs, report);
    }

    {
        std::vector<Point> grid = square_grid(bounds.marked_cap);
        std::vector<ChunkOut> outs = run_indexed<ChunkOut>(grid.size(), jobs, [&](std::size_t first) {
            ChunkOut out;
            for_each_subset_from(grid, first, bounds.marked_min_pts, bounds.marked_max_pts,
                                 [&](const std::vector<Point>& pts) {
                                     PointConfig cfg(2, pts);
                                     if (cfg.dim() != 2) return;
                                     std::vector<Face> facets = facets_of(cfg);
                                     for (unsigned mask = 0; mask < (1u << facets.size()); ++mask) {
                                         std::vector<std::vector<Point>> marks;
                                         for (std::size_t f = 0; f < facets.size(); ++f)
                                             if (mask & (1u << f)) marks.push_back(facets[f].members);
                                         MarkedPolytope mp(cfg, marks);
                                         ++out.counts["marked_configs"];
                                         bool brute = is_marked_b_polytope(mp).holds;
                                         bool classed = classify_marked_polygon(mp).tag !=
                                                        MarkedPolygonTag::NotMarkedB;
                                         if (brute) ++out.counts["marked_b_polygons"];
                                         if (brute != classed)
                                             out.violations.push_back(Violation{
                                                 "marked_2d", cfg.points(),
                                                 "marking mask " + std::to_string(mask) + ": predicate " +
                                                     (brute ? "holds" : "fails") + " but classification " +
                                                     (classed ? "matches" : "matches nothing")});
                                     }
                                 });
            return out;
        });
        merge_chunks(outs, report);
    }

    {
        ChunkOut out;
        const Coord m = bounds.one_d_max;
        for (unsigned mask = 0; mask < (1u << (m + 1)); ++mask) {
            std::vector<Point> pts;
            for (Coord i = 0; i <= m; ++i)
                if (mask & (1u << i)) pts.push_back({i});
            if (pts.size() < 2) continue;
            PointConfig cfg(1, pts);
            ++out.counts["one_d_configs"];
            bool expect = pts == std::vector<Point>{{0}, {1}};
            if (is_b_polytope(cfg).holds != expect)
                out.violations.push_back(Violation{"one_d_polytope", cfg.points(), "B-polytope mismatch"});
            std::vector<Face> facets = facets_of(cfg);
            for (unsigned mk = 0; mk < (1u << facets.size()); ++mk) {
                std::vector<std::vector<Point>> marks;
                for (std::size_t f = 0; f < facets.size(); ++f)
                    if (mk & (1u << f)) marks.push_back(facets[f].members);
                MarkedPolytope mp(cfg, marks);
                bool expect_marked =
                    pts.size() == 2 && pts[1][0] - pts[0][0] == 1 && !marks.empty();
                if (is_marked_b_polytope(mp).holds != expect_marked)
                    out.violations.push_back(
                        Violation{"one_d_marked", cfg.points(),
                                  "marking mask " + std::to_string(mk) + ": marked B-polytope mismatch"});
            }
        }
        merge_chunks({out}, report);
    }

    std::sort(report.violations.begin(), report.violations.end());
    report.elapsed_ms = ms_since(start);
    return report;
}

std::vector<ExoticInstance> find_exotic_instances(const ExoticBounds& bounds) {
    std::vector<ExoticInstance> out;
    std::set<std::vector<Point>> seen;

    auto consider = [&](const std::string& family, std::vector<Coord> params, const std::vector<Point>& pts,
                        bool need_coplanar_tail) {
        std::set<Point> uniq(pts.begin(), pts.end());
        if (uniq.size() != pts.size()) return;
        PointConfig cfg(4, pts);
        if (cfg.dim() != 3 || !cfg.positive_hyperplane()) return;
        if (need_coplanar_tail) {
            std::vector<Point> tail(pts.begin() + 1, pts.end());
            if (affine_dim(tail) != 2) return;
        }
        if (!is_b_facet(cfg).holds) return;
        if (!match_flat_border(cfg) || match_b1(cfg) || match_b2(cfg)) return;
        if (!seen.insert(cfg.points()).second) return;
        out.push_back(ExoticInstance{family, std::move(params), std::move(cfg)});
    };

    for (Coord a = 1; a <= bounds.a_max; ++a)
        for (Coord s1 = 0; s1 <= bounds.star_max; ++s1)
            for (Coord s2 = 0; s2 <= bounds.star_max; ++s2)
                for (Coord s3 = 0; s3 <= bounds.star_max; ++s3)
                    for (Coord s4 = 0; s4 <= bounds.star_max; ++s4)
                        for (Coord s5 = 0; s5 <= bounds.star_max; ++s5)
                            consider("pyramid", {a, s1, s2, s3, s4, s5},
                                     {{0, 0, 0, s1}, {0, 0, a, s2}, {a, 0, 0, s3}, {0, 1, 1, s4}, {1, 1, 0, s5}},
                                     true);

    for (Coord t1 = 0; t1 <= bounds.star_max; ++t1)
        for (Coord t2 = 0; t2 <= bounds.star_max; ++t2)
            for (Coord t3 = 0; t3 <= bounds.star_max; ++t3)
                consider("circuit", {t1, t2, t3},
                         {{0, 0, 0, t1}, {1, 1, 0, 0}, {0, 1, 0, 1}, {t2, 0, 1, 0}, {0, 0, t3, 0}}, false);

    return out;
}

}  // namespace bfacet
