#include "lorpath/report.hpp"

#include "json.hpp"

namespace lorpath::report {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_token(const Rational& r) {
  if (r.is_integer()) return r.numerator();
  return r.decimal_or_fraction();
}

ordered_json rational_list(const std::vector<Rational>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& v : values) out.push_back(rational_token(v));
  return out;
}

ordered_json graph_block(const IndexedGraph& g) {
  ordered_json block;
  block["scenarios"] = g.scenarios();
  block["nodes"] = g.node_count();
  block["arcs"] = g.arc_count();
  block["source"] = g.spec().source;
  block["goals"] = g.spec().goals;
  return block;
}

ordered_json solution_block(const Solution& s) {
  ordered_json out;
  out["nodes"] = s.nodes;
  out["cost"] = s.cost;
  out["lorenz"] = s.lorenz.cum;
  if (s.owa) out["owa_value"] = rational_token(*s.owa);
  return out;
}

ordered_json statistics_block(const SearchStatistics& stats) {
  ordered_json out;
  out["labels_created"] = stats.labels_created;
  out["labels_expanded"] = stats.labels_expanded;
  out["pruned_rule1"] = stats.pruned_rule1;
  out["pruned_rule2"] = stats.pruned_rule2;
  out["sum_bound_fast_hits"] = stats.sum_bound_fast_hits;
  return out;
}

ordered_json path_block(const oracle::PathRecord& p) {
  ordered_json out;
  out["nodes"] = p.nodes;
  out["cost"] = p.path.cost;
  out["lorenz"] = lorenz_vector(p.path.cost).cum;
  return out;
}

void add_weights(ordered_json& j, const OwaWeights* weights) {
  if (!weights) return;
  j["phi"] = rational_list(weights->phi());
  j["weights"] = rational_list(weights->weights());
}

std::string render(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string trace_row(const TraceRow& row) {
  return row.node + "\tg=" + format_costs(row.g) + "\tL(f)=" + format_costs(row.f.cum);
}

std::string render_search(const IndexedGraph& g, std::string_view mode, std::string_view heuristic,
                          const OwaWeights* weights, const SearchResult& result, bool include_trace,
                          std::int64_t wall_ms) {
  ordered_json j;
  j["command"] = "search";
  j["graph"] = graph_block(g);
  j["mode"] = std::string(mode);
  j["heuristic"] = std::string(heuristic);
  add_weights(j, weights);
  j["solutions"] = ordered_json::array();
  for (const auto& s : result.solutions) j["solutions"].push_back(solution_block(s));
  if (result.owa_value) j["value"] = rational_token(*result.owa_value);
  if (result.mode == SearchMode::owa && result.solutions.empty()) j["no_path"] = true;
  j["statistics"] = statistics_block(result.stats);
  if (include_trace) {
    j["trace"] = ordered_json::array();
    for (const auto& row : result.trace) j["trace"].push_back(trace_row(row));
    j["prunes"] = ordered_json::array();
    for (const auto& p : result.prunes) {
      ordered_json entry;
      entry["node"] = p.node;
      entry["g"] = p.g;
      entry["rule"] = p.rule;
      entry["against"] = p.against;
      j["prunes"].push_back(std::move(entry));
    }
  }
  j["wall_time_ms"] = wall_ms;
  return render(j);
}

std::string render_validation(const ScenarioGraph& g, const ValidationReport& report) {
  ordered_json j;
  j["command"] = "validate";
  j["scenarios"] = g.scenario_count;
  j["ok"] = report.ok;
  j["violations"] = report.violations;
  j["strictly_positive"] = report.strictly_positive;
  j["is_dag"] = report.is_dag;
  return render(j);
}

std::string render_oracle_paths(const IndexedGraph& g, const std::vector<oracle::PathRecord>& paths,
                                std::uint64_t max_paths, std::int64_t wall_ms) {
  ordered_json j;
  j["command"] = "oracle";
  j["oracle"] = true;
  j["graph"] = graph_block(g);
  j["mode"] = "paths";
  j["max_paths"] = max_paths;
  j["count"] = paths.size();
  j["paths"] = ordered_json::array();
  for (const auto& p : paths) j["paths"].push_back(path_block(p));
  j["wall_time_ms"] = wall_ms;
  return render(j);
}

std::string render_oracle_frontier(const IndexedGraph& g, std::string_view mode,
                                   const std::vector<oracle::FrontierEntry>& entries,
                                   std::uint64_t max_paths, std::int64_t wall_ms) {
  ordered_json j;
  j["command"] = "oracle";
  j["oracle"] = true;
  j["graph"] = graph_block(g);
  j["mode"] = std::string(mode);
  j["max_paths"] = max_paths;
  j["count"] = entries.size();
  j["solutions"] = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json s;
    s["nodes"] = e.witness.nodes;
    s["cost"] = e.cost;
    s["lorenz"] = e.lorenz.cum;
    s["class_size"] = e.class_size;
    j["solutions"].push_back(std::move(s));
  }
  j["wall_time_ms"] = wall_ms;
  return render(j);
}

std::string render_oracle_owa(const IndexedGraph& g, const OwaWeights& weights,
                              const oracle::OwaOptimum& optimum, std::uint64_t max_paths,
                              std::int64_t wall_ms) {
  ordered_json j;
  j["command"] = "oracle";
  j["oracle"] = true;
  j["graph"] = graph_block(g);
  j["mode"] = "owa";
  j["max_paths"] = max_paths;
  add_weights(j, &weights);
  if (optimum.path) {
    j["value"] = rational_token(optimum.value);
    j["solution"] = path_block(*optimum.path);
  } else {
    j["no_path"] = true;
  }
  j["wall_time_ms"] = wall_ms;
  return render(j);
}

std::string render_decide(const IndexedGraph& g, const CostVector& target,
                          const oracle::Decision& decision, std::uint64_t max_paths,
                          std::int64_t wall_ms, bool as_oracle) {
  ordered_json j;
  j["command"] = as_oracle ? "oracle" : "decide";
  if (as_oracle) j["oracle"] = true;
  j["graph"] = graph_block(g);
  if (as_oracle) j["mode"] = "decide";
  j["target"] = target;
  j["target_lorenz"] = lorenz_vector(target).cum;
  j["max_paths"] = max_paths;
  j["decision"] = decision.exists;
  if (decision.witness) j["witness"] = path_block(*decision.witness);
  j["wall_time_ms"] = wall_ms;
  return render(j);
}

std::string render_compare(const IndexedGraph& g, std::string_view mode, std::string_view heuristic,
                           const OwaWeights* weights, const CompareOutcome& outcome,
                           std::int64_t wall_ms) {
  const auto lorenz_list = [](const std::vector<LorenzVector>& vs) {
    ordered_json out = ordered_json::array();
    for (const auto& v : vs) out.push_back(v.cum);
    return out;
  };
  ordered_json j;
  j["command"] = "compare";
  j["graph"] = graph_block(g);
  j["mode"] = std::string(mode);
  j["heuristic"] = std::string(heuristic);
  add_weights(j, weights);
  j["agree"] = outcome.agree;
  if (outcome.owa_mode) {
    j["search_value"] = outcome.search_no_path ? ordered_json("no_path")
                                               : rational_token(outcome.search_value);
    j["oracle_value"] = outcome.oracle_no_path ? ordered_json("no_path")
                                               : rational_token(outcome.oracle_value);
  } else {
    j["search_frontier"] = lorenz_list(outcome.search_frontier);
    j["oracle_frontier"] = lorenz_list(outcome.oracle_frontier);
    j["missing"] = lorenz_list(outcome.missing);
    j["extra"] = lorenz_list(outcome.extra);
  }
  j["wall_time_ms"] = wall_ms;
  return render(j);
}

}  // namespace lorpath::report
