#pragma once

#include <json.hpp>

#include "blockset/census.hpp"

namespace blockset {

using json = nlohmann::json;

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

json point_set_to_json(const PointSet& s);
// Accepts a bare point-set object or anything embedding one under "set".
PointSet point_set_from_json(const json& j);

json collineation_to_json(const Collineation& c);
Collineation collineation_from_json(const json& j);

json triple_to_json(const ArrowTriple& t);
ArrowTriple triple_from_json(const json& j);

json blocking_report_to_json(const BlockingReport& r);
json construction_to_json(const ConstructionRecord& r);
json census_to_json(const CensusReport& r);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace blockset
