#pragma once

#include <string>
#include <string_view>

#include "lorpath/model.hpp"

namespace lorpath {

// Graph file schema:
//   {"scenarios": m, "nodes": [...], "source": "a", "goals": ["g1"],
//    "arcs": [{"from":"a","to":"b","cost":[5,3]}, ...]}
// plus an optional "meta" object that is carried through untouched.
// Unknown keys are rejected; costs must be integer JSON numbers.

/// Throws ParseError on malformed input. Structural validity is not checked
/// here; see validate_graph.
ScenarioGraph graph_from_json(std::string_view text);

/// Canonical form: fixed key order, two-space indent, trailing newline.
/// graph_to_json(graph_from_json(s)) == s for canonical s.
std::string graph_to_json(const ScenarioGraph& g);

}  // namespace lorpath
