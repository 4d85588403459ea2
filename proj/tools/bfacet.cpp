// bfacet: classify lattice point configurations, check B-hierarchy
// predicates, and run the bounded verification censuses.
//
// Exit codes: 0 success/verified, 1 property fails (witness printed),
// 2 input error, 3 internal/overflow error.

#include <CLI11.hpp>
#include <iostream>
#include <thread>

#include "bfacet/census.hpp"
#include "bfacet/io.hpp"
#include "bfacet/report.hpp"

using namespace bfacet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

Json facet_class_json(const FacetClass& cls) {
    Json doc;
    doc["tag"] = facet_class_name(cls.tag);
    if (cls.b1) {
        doc["coordinate"] = cls.b1->coord + 1;  // 1-based in reports
        doc["apex"] = cls.b1->apex;
    }
    if (cls.b2) {
        doc["coordinates"] = Json::array({cls.b2->i + 1, cls.b2->j + 1});
        doc["degenerate"] = cls.b2->degenerate;
    }
    if (cls.flat) {
        doc["coordinates"] = Json::array({cls.flat->i + 1, cls.flat->j + 1});
        doc["triangle"] = points_json({cls.flat->a, cls.flat->b, cls.flat->c});
    }
    if (cls.cross_permutation) doc["permutation"] = *cls.cross_permutation;
    if (cls.tag == FacetTag::FlatBorder) doc["exotic_subtype"] = exotic_name(cls.exotic);
    return doc;
}

int cmd_classify(const std::string& path, const ReportOptions& opts) {
    PointSetFile file = load_point_set(path);
    if (file.dim != 4) throw GeometryError("facet classification requires dim 4");
    PointConfig config = file.to_config();
    Json doc;
    doc["command"] = "classify";
    doc["points"] = points_json(config.points());
    doc["hyperplane"] = hyperplane_json(config.require_positive_hyperplane());
    Verdict v = is_b_facet(config);
    doc["is_b_facet"] = verdict_json(v);
    doc["class"] = facet_class_json(classify_facet(config));
    std::cout << render(doc, opts);
    return kExitOk;
}

int cmd_check(const std::string& predicate, const std::string& path, const ReportOptions& opts) {
    PointSetFile file = load_point_set(path);
    Json doc;
    doc["command"] = "check";
    doc["predicate"] = predicate;
    doc["points"] = points_json(file.points);

    bool holds = true;
    if (predicate == "b-facet") {
        Verdict v = is_b_facet(file.to_config());
        doc["verdict"] = verdict_json(v);
        holds = v.holds;
    } else if (predicate == "b-polytope") {
        Verdict v = is_b_polytope(file.to_config());
        doc["verdict"] = verdict_json(v);
        holds = v.holds;
    } else if (predicate == "marked-b-polytope") {
        MarkedPolytope mp = file.to_marked_polytope();
        Json marked = Json::array();
        for (const Face& f : mp.marked()) marked.push_back(points_json(f.members));
        doc["marked_facets"] = marked;
        Verdict v = is_marked_b_polytope(mp);
        doc["verdict"] = verdict_json(v);
        doc["class"] = marked_polygon_name(mp.config().ambient_dim() == 2
                                               ? classify_marked_polygon(mp).tag
                                               : MarkedPolygonTag::NotMarkedB);
        if (mp.config().ambient_dim() != 2) doc.erase("class");
        holds = v.holds;
    } else if (predicate == "b-face") {
        PointConfig config = file.to_config();
        Face improper;
        for (Face& f : enumerate_faces(config))
            if (f.members.size() == config.size()) improper = f;
        holds = is_b_face(config, improper);
        doc["verdict"]["holds"] = holds;
    } else if (predicate == "v-faces") {
        PointConfig config = file.to_config();
        Json faces = Json::array();
        for (const Face& f : enumerate_faces(config))
            if (is_v_face(f, config.ambient_dim())) faces.push_back(points_json(f.members));
        doc["v_faces"] = faces;
        Json internal = Json::array();
        for (const Face& f : internal_v_faces(config)) internal.push_back(points_json(f.members));
        doc["internal_v_faces"] = internal;
    } else {
        throw CLI::ValidationError("unknown predicate: " + predicate);
    }
    std::cout << render(doc, opts);
    return holds ? kExitOk : kExitPropertyFails;
}

int cmd_examples(const ReportOptions& opts) {
    struct Entry {
        std::string name;
        std::string expect;
        std::vector<Point> points;
        bool expect_b_facet;
        FacetTag expect_tag;
        ExoticSubtype expect_exotic;
    };
    const std::vector<Entry> corpus = {
        {"five-point flat border",
         "a flat border that is not a B-facet; the failing simplex is printed",
         {{0, 0, 0, 5}, {0, 0, 1, 4}, {1, 1, 0, 3}, {1, 0, 2, 2}, {0, 1, 2, 2}},
         false, FacetTag::FlatBorder, ExoticSubtype::None},
        {"standard cross-polytope",
         "the six 0/1 points with two unit coordinates; a B-facet of its own class",
         {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}},
         true, FacetTag::CrossPolytope, ExoticSubtype::None},
        {"flat B-border pyramid",
         "a B-facet that is a flat border and neither B1 nor B2 (pyramid family)",
         {{0, 0, 0, 3}, {0, 0, 2, 1}, {2, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}},
         true, FacetTag::FlatBorder, ExoticSubtype::Pyramid},
        {"flat B-border circuit",
         "a B-facet that is a flat border and neither B1 nor B2 (circuit family)",
         {{0, 0, 0, 2}, {1, 1, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 0, 2, 0}},
         true, FacetTag::FlatBorder, ExoticSubtype::Circuit},
    };

    Json doc;
    doc["command"] = "examples";
    doc["entries"] = Json::array();
    bool all_ok = true;
    for (const Entry& entry : corpus) {
        PointConfig config(4, entry.points);
        Verdict v = is_b_facet(config);
        FacetClass cls = classify_facet(config);
        bool ok = v.holds == entry.expect_b_facet && cls.tag == entry.expect_tag &&
                  cls.exotic == entry.expect_exotic;
        if (!v.holds && v.counterexample) ok = ok && !is_b_simplex(*v.counterexample).has_value();
        all_ok = all_ok && ok;
        Json e;
        e["name"] = entry.name;
        e["description"] = entry.expect;
        e["points"] = points_json(config.points());
        e["is_b_facet"] = verdict_json(v);
        e["class"] = facet_class_json(cls);
        e["verified"] = ok;
        doc["entries"].push_back(e);
    }
    doc["ok"] = all_ok;
    std::cout << render(doc, opts);
    return all_ok ? kExitOk : kExitPropertyFails;
}

int emit_census(const CensusReport& report, const ReportOptions& opts) {
    std::cout << render(census_report_json(report, opts.include_timing), opts);
    return report.ok() ? kExitOk : kExitPropertyFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact B-facet classification and bounded-census verification for lattice point sets"};
    app.require_subcommand(1);

    ReportOptions opts;
    std::string format = "human";
    app.add_option("--format", format, "output format: human | structured")
        ->check(CLI::IsMember({"human", "structured"}));
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--jobs", jobs, "parallelism degree for censuses")->check(CLI::PositiveNumber);

    std::string classify_path;
    CLI::App* classify = app.add_subcommand("classify", "classify a 4-dimensional facet candidate");
    classify->add_option("file", classify_path, "point set file")->required();

    std::string check_predicate, check_path;
    CLI::App* check = app.add_subcommand("check", "run one predicate on a point set file");
    check->add_option("predicate", check_predicate,
                      "b-facet | b-polytope | marked-b-polytope | b-face | v-faces")
        ->required();
    check->add_option("file", check_path, "point set file")->required();

    CLI::App* census = app.add_subcommand("census", "run a verification census");
    census->require_subcommand(1);
    CensusBounds bounds;
    bounds.max_points = 8;
    Coord coordinate_cap = -1;
    int samples = 200;
    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--max-covector", bounds.max_covector, "covector entries in [1, A]");
        sub->add_option("--max-offset", bounds.max_offset, "offsets in [1, B]");
        sub->add_option("--max-points", bounds.max_points, "configurations of n+1..S points");
        sub->add_option("--coordinate-cap", coordinate_cap, "optional cap on point coordinates");
    };
    CLI::App* census_theorem = census->add_subcommand("theorem", "every B-facet is one of the four classes");
    add_bounds(census_theorem);
    CLI::App* census_remark = census->add_subcommand("remark", "B1/B2/cross patterns are always B-facets");
    add_bounds(census_remark);
    census_remark->add_option("--samples", samples, "randomized pattern samples");
    CLI::App* census_claims = census->add_subcommand("claims", "unit-ray and V-face claims");
    add_bounds(census_claims);
    CLI::App* census_projection = census->add_subcommand("projection", "projections are B-polytopes");
    add_bounds(census_projection);
    CLI::App* census_section = census->add_subcommand("section", "apex sections are marked B-polytopes");
    add_bounds(census_section);

    TwoDBounds bounds2d;
    CLI::App* census_2d = census->add_subcommand("2d", "two-dimensional and 1-D classifications");
    census_2d->add_option("--poly-cap", bounds2d.poly_cap, "grid cap for the B-polytope check");
    census_2d->add_option("--poly-max-points", bounds2d.poly_max_pts, "max points for the B-polytope check");
    census_2d->add_option("--marked-cap", bounds2d.marked_cap, "grid cap for the marked-polygon check");
    census_2d->add_option("--marked-max-points", bounds2d.marked_max_pts,
                          "max points for the marked-polygon check");
    census_2d->add_option("--one-d-max", bounds2d.one_d_max, "1-D ground set {0..M}");

    ExoticBounds exotic_bounds;
    CLI::App* census_exotic = census->add_subcommand("exotic", "search the exotic flat-border templates");
    census_exotic->add_option("--a-max", exotic_bounds.a_max, "template edge parameter bound");
    census_exotic->add_option("--star-max", exotic_bounds.star_max, "free template coordinate bound");

    CLI::App* examples = app.add_subcommand("examples", "print and re-verify the built-in corpus");

    // global flags may appear after the subcommand
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    opts.structured = format == "structured";
    if (coordinate_cap >= 0) bounds.coordinate_cap = coordinate_cap;

    try {
        if (*classify) return cmd_classify(classify_path, opts);
        if (*check) return cmd_check(check_predicate, check_path, opts);
        if (*examples) return cmd_examples(opts);
        if (*census_theorem) return emit_census(verify_main_theorem(bounds, jobs), opts);
        if (*census_remark) return emit_census(verify_remark(bounds, samples, jobs), opts);
        if (*census_claims) return emit_census(verify_claims(bounds, jobs), opts);
        if (*census_projection) return emit_census(verify_lemma_projection(bounds, jobs), opts);
        if (*census_section) return emit_census(verify_lemma_section(bounds, jobs), opts);
        if (*census_2d) return emit_census(verify_2d_lemmas(bounds2d, jobs), opts);
        if (*census_exotic) {
            auto instances = find_exotic_instances(exotic_bounds);
            Json doc;
            doc["command"] = "census exotic";
            doc["a_max"] = exotic_bounds.a_max;
            doc["star_max"] = exotic_bounds.star_max;
            std::int64_t pyramids = 0, circuits = 0;
            Json arr = Json::array();
            for (const ExoticInstance& inst : instances) {
                (inst.family == "pyramid" ? pyramids : circuits)++;
                Json e;
                e["family"] = inst.family;
                e["params"] = inst.params;
                e["points"] = points_json(inst.config.points());
                arr.push_back(e);
            }
            doc["pyramids"] = pyramids;
            doc["circuits"] = circuits;
            doc["instances"] = arr;
            std::cout << render(doc, opts);
            return (pyramids > 0 && circuits > 0) ? kExitOk : kExitPropertyFails;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const OverflowError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
    return kExitInputError;
}
