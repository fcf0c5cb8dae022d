#pragma once

#include <string>

#include "json.hpp"
#include "plumb/bounds.hpp"
#include "plumb/catalog.hpp"
#include "plumb/seifert_graph.hpp"

namespace plumb {

using Json = nlohmann::ordered_json;

// {"input", "graph", "bounds", "best", "genus", "flags", "analysis"}; keys
// are emitted in a fixed order and carry no timestamps.
Json report_to_json(const BoundsReport& report);

std::string report_to_text(const BoundsReport& report, bool color);

Json error_to_json(const std::string& code, const std::string& message);

// Raw graph format: {"s": int, "l": int, "edges": [[u, v, sign], ...]}.
// Throws InputError (parse_error) on missing keys or wrong types; graph
// invariants are left to validate().
SeifertGraph graph_from_json(const Json& j);
Json graph_to_json(const SeifertGraph& g);

// {"name", "description", "braid": {"word", "strands"}} or
// {"name", "description", "graph": {...raw graph...}}.
Json fixture_to_json(const Fixture& fixture);

}  // namespace plumb
