#pragma once

// Report documents built as JSON with stable field order; the human format is
// an indented rendering of the same tree.

#include <string>

#include <json.hpp>

#include "bfacet/census.hpp"

namespace bfacet {

using Json = nlohmann::ordered_json;

struct ReportOptions {
    bool structured = false;     // emit JSON instead of human text
    bool include_timing = true;  // elapsed_ms is excluded from determinism checks
};

Json points_json(const std::vector<Point>& pts);
Json hyperplane_json(const Hyperplane& h);
Json verdict_json(const Verdict& v);
Json census_report_json(const CensusReport& report, bool include_timing);

std::string render(const Json& doc, const ReportOptions& opts);

std::string facet_class_name(FacetTag tag);
std::string exotic_name(ExoticSubtype subtype);
std::string polytope2d_name(Polytope2DTag tag);
std::string marked_polygon_name(MarkedPolygonTag tag);

}  // namespace bfacet
