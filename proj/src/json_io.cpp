#include "lorpath/json_io.hpp"

#include <set>
#include <string>

#include "json.hpp"

namespace lorpath {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw ParseError("graph json: " + what); }

void expect_keys(const ordered_json& obj, const std::set<std::string>& known,
                 const std::set<std::string>& required, const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!known.contains(item.key())) fail(where + ": unknown key '" + item.key() + "'");
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) fail(where + ": missing key '" + key + "'");
  }
}

Cost integer_cost(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + ": cost must be an integer JSON number");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    fail(where + ": cost out of range");
  }
  return v.get<Cost>();
}

std::string string_field(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) fail(where + ": expected a string");
  return v.get<std::string>();
}

}  // namespace

ScenarioGraph graph_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  expect_keys(j, {"scenarios", "nodes", "source", "goals", "arcs", "meta"},
              {"scenarios", "nodes", "source", "goals", "arcs"}, "top level");

  ScenarioGraph g;
  if (!j["scenarios"].is_number_integer()) fail("'scenarios' must be an integer");
  const auto scenarios = j["scenarios"].get<std::int64_t>();
  if (scenarios < 0 || scenarios > 1'000'000) fail("'scenarios' out of range");
  g.scenario_count = static_cast<int>(scenarios);

  if (!j["nodes"].is_array()) fail("'nodes' must be an array");
  for (const auto& n : j["nodes"]) g.nodes.push_back(string_field(n, "nodes"));

  g.source = string_field(j["source"], "source");

  if (!j["goals"].is_array()) fail("'goals' must be an array");
  for (const auto& n : j["goals"]) g.goals.push_back(string_field(n, "goals"));

  if (!j["arcs"].is_array()) fail("'arcs' must be an array");
  for (std::size_t i = 0; i < j["arcs"].size(); ++i) {
    const auto& a = j["arcs"][i];
    const std::string where = "arc " + std::to_string(i);
    if (!a.is_object()) fail(where + ": expected an object");
    expect_keys(a, {"from", "to", "cost"}, {"from", "to", "cost"}, where);
    ArcSpec arc;
    arc.from = string_field(a["from"], where);
    arc.to = string_field(a["to"], where);
    if (!a["cost"].is_array()) fail(where + ": 'cost' must be an array");
    for (const auto& c : a["cost"]) arc.cost.push_back(integer_cost(c, where));
    g.arcs.push_back(std::move(arc));
  }

  if (j.contains("meta")) g.meta_json = j["meta"].dump();
  return g;
}

std::string graph_to_json(const ScenarioGraph& g) {
  ordered_json j;
  j["scenarios"] = g.scenario_count;
  j["nodes"] = g.nodes;
  j["source"] = g.source;
  j["goals"] = g.goals;
  j["arcs"] = ordered_json::array();
  for (const auto& arc : g.arcs) {
    ordered_json a;
    a["from"] = arc.from;
    a["to"] = arc.to;
    a["cost"] = arc.cost;
    j["arcs"].push_back(std::move(a));
  }
  if (!g.meta_json.empty()) j["meta"] = ordered_json::parse(g.meta_json);
  return j.dump(2) + "\n";
}

}  // namespace lorpath
