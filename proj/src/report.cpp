#include "bfacet/report.hpp"

#include <sstream>

namespace bfacet {

Json points_json(const std::vector<Point>& pts) {
    Json arr = Json::array();
    for (const Point& p : pts) arr.push_back(p);
    return arr;
}

Json hyperplane_json(const Hyperplane& h) {
    Json doc;
    doc["covector"] = h.covector;
    doc["offset"] = h.offset;
    return doc;
}

Json verdict_json(const Verdict& v) {
    Json doc;
    doc["holds"] = v.holds;
    if (v.counterexample) doc["counterexample"] = points_json(v.counterexample->vertices);
    return doc;
}

Json census_report_json(const CensusReport& report, bool include_timing) {
    Json doc;
    doc["census"] = report.name;
    doc["bounds"] = Json::object();
    for (const auto& [k, v] : report.params) doc["bounds"][k] = v;
    doc["totals"] = Json::object();
    for (const auto& [k, v] : report.totals) doc["totals"][k] = v;
    doc["counts"] = Json::object();
    for (const auto& [k, v] : report.counts) doc["counts"][k] = v;
    doc["violations"] = Json::array();
    for (const Violation& v : report.violations) {
        Json entry;
        entry["check"] = v.check;
        entry["config"] = points_json(v.config);
        entry["detail"] = v.detail;
        doc["violations"].push_back(entry);
    }
    doc["ok"] = report.ok();
    if (include_timing) doc["elapsed_ms"] = report.elapsed_ms;
    return doc;
}

namespace {

void render_human(const Json& doc, int indent, std::ostringstream& out) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_structured())) {
                out << pad << key << ":\n";
                render_human(value, indent + 1, out);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (doc.is_array()) {
        for (const auto& value : doc) {
            if (value.is_structured() && value.is_object()) {
                out << pad << "-\n";
                render_human(value, indent + 1, out);
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        out << pad << doc.dump() << "\n";
    }
}

}  // namespace

std::string render(const Json& doc, const ReportOptions& opts) {
    if (opts.structured) return doc.dump(2) + "\n";
    std::ostringstream out;
    render_human(doc, 0, out);
    return out.str();
}

std::string facet_class_name(FacetTag tag) {
    switch (tag) {
        case FacetTag::B1: return "B1";
        case FacetTag::B2: return "B2";
        case FacetTag::FlatBorder: return "FlatBorder";
        case FacetTag::CrossPolytope: return "CrossPolytope";
        default: return "Unclassified";
    }
}

std::string exotic_name(ExoticSubtype subtype) {
    switch (subtype) {
        case ExoticSubtype::Pyramid: return "Pyramid";
        case ExoticSubtype::Circuit: return "Circuit";
        default: return "None";
    }
}

std::string polytope2d_name(Polytope2DTag tag) {
    switch (tag) {
        case Polytope2DTag::B1Polytope: return "B1Polytope";
        case Polytope2DTag::BorderPolytope: return "BorderPolytope";
        default: return "NotBPolytope";
    }
}

std::string marked_polygon_name(MarkedPolygonTag tag) {
    switch (tag) {
        case MarkedPolygonTag::B1Marked: return "B1Marked";
        case MarkedPolygonTag::B2Marked: return "B2Marked";
        case MarkedPolygonTag::FlatBorderMarked: return "FlatBorderMarked";
        default: return "NotMarkedB";
    }
}

}  // namespace bfacet
