#pragma once

#include <string>

#include <json.hpp>

#include "dmm/delta_matroid.hpp"
#include "dmm/multimatroid.hpp"
#include "dmm/ribbon.hpp"

namespace dmm {

using json = nlohmann::json;

// {"elements": ["a", ...], "feasible": [["a"], [], ...]}
json to_json(const DeltaMatroid& d);
DeltaMatroid delta_from_json(const json& doc);

// {"classes": [["a","a'"], ...], "bases": [["a","b"], ...]}
json to_json(const Multimatroid& q);
Multimatroid mm_from_json(const json& doc);

// {"vertices": [["h0","h1"], ...], "edges": {"a": {"halves": [...], "twisted": false}}}
json to_json(const RibbonGraph& g);
RibbonGraph ribbon_from_json(const json& doc);

enum class DocKind { Delta, Multimatroid, Ribbon };
DocKind detect_kind(const json& doc);

json load_json_file(const std::string& path);

}  // namespace dmm
