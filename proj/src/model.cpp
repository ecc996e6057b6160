#include "lorpath/model.hpp"

#include <algorithm>
#include <sstream>

namespace lorpath {

CostVector add(const CostVector& a, const CostVector& b) {
  if (a.size() != b.size()) throw ArgumentError("cost vector length mismatch");
  CostVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Cost sum_of(const CostVector& v) {
  Cost s = 0;
  for (Cost c : v) s += c;
  return s;
}

Cost max_of(const CostVector& v) {
  if (v.empty()) throw ArgumentError("max of empty cost vector");
  return *std::max_element(v.begin(), v.end());
}

CostVector zeros(std::size_t m) { return CostVector(m, 0); }

std::string format_costs(const CostVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += "]";
  return s;
}

namespace {

// Cycle detection over resolved arcs; three-color DFS, iterative.
bool acyclic(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& out,
             const std::vector<std::uint32_t>& arc_to) {
  std::vector<char> state(n, 0);  // 0 white, 1 on stack, 2 done
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    stack.emplace_back(start, 0);
    state[start] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < out[node].size()) {
        const std::uint32_t to = arc_to[out[node][next++]];
        if (state[to] == 1) return false;
        if (state[to] == 0) {
          state[to] = 1;
          stack.emplace_back(to, 0);
        }
      } else {
        state[node] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_graph(const ScenarioGraph& g) {
  ValidationReport report;
  auto& bad = report.violations;

  if (g.scenario_count < 1) bad.push_back("scenario count must be at least 1");
  if (g.nodes.empty()) bad.push_back("node list is empty");

  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < g.nodes.size(); ++i) {
    if (!index.emplace(g.nodes[i], i).second) bad.push_back("duplicate node '" + g.nodes[i] + "'");
  }
  if (!index.contains(g.source)) bad.push_back("source '" + g.source + "' not in nodes");
  if (g.goals.empty()) bad.push_back("goal set is empty");
  {
    std::vector<std::string> seen;
    for (const auto& goal : g.goals) {
      if (!index.contains(goal)) bad.push_back("goal '" + goal + "' not in nodes");
      if (std::find(seen.begin(), seen.end(), goal) != seen.end()) {
        bad.push_back("duplicate goal '" + goal + "'");
      }
      seen.push_back(goal);
    }
  }

  bool endpoints_ok = true;
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    const auto& arc = g.arcs[a];
    const std::string where = "arc " + std::to_string(a);
    if (!index.contains(arc.from)) {
      bad.push_back(where + ": endpoint '" + arc.from + "' not in nodes");
      endpoints_ok = false;
    }
    if (!index.contains(arc.to)) {
      bad.push_back(where + ": endpoint '" + arc.to + "' not in nodes");
      endpoints_ok = false;
    }
    if (static_cast<int>(arc.cost.size()) != g.scenario_count) {
      bad.push_back(where + ": cost arity " + std::to_string(arc.cost.size()) + " != " +
                    std::to_string(g.scenario_count));
    }
    for (Cost c : arc.cost) {
      if (c < 0) {
        bad.push_back(where + ": negative cost");
        break;
      }
    }
  }

  report.ok = bad.empty();
  if (report.ok || (endpoints_ok && !g.nodes.empty())) {
    bool positive = true;
    std::vector<std::vector<std::uint32_t>> out(g.nodes.size());
    std::vector<std::uint32_t> arc_to(g.arcs.size());
    for (std::uint32_t a = 0; a < g.arcs.size(); ++a) {
      out[index.at(g.arcs[a].from)].push_back(a);
      arc_to[a] = index.at(g.arcs[a].to);
      for (Cost c : g.arcs[a].cost) positive = positive && c > 0;
    }
    report.strictly_positive = positive;
    report.is_dag = acyclic(static_cast<std::uint32_t>(g.nodes.size()), out, arc_to);
  }
  if (!report.ok) {
    report.strictly_positive = false;
    report.is_dag = false;
  }
  return report;
}

IndexedGraph::IndexedGraph(const ScenarioGraph& g) : graph_(&g) {
  const ValidationReport report = validate_graph(g);
  if (!report.ok) {
    std::string msg = "invalid graph:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw GraphError(msg);
  }
  strictly_positive_ = report.strictly_positive;
  is_dag_ = report.is_dag;

  for (std::uint32_t i = 0; i < g.nodes.size(); ++i) index_.emplace(g.nodes[i], i);
  source_ = index_.at(g.source);
  is_goal_.assign(g.nodes.size(), 0);
  for (const auto& goal : g.goals) {
    const std::uint32_t idx = index_.at(goal);
    if (!is_goal_[idx]) goals_.push_back(idx);
    is_goal_[idx] = 1;
  }
  out_.resize(g.nodes.size());
  arc_from_.resize(g.arcs.size());
  arc_to_.resize(g.arcs.size());
  for (std::uint32_t a = 0; a < g.arcs.size(); ++a) {
    arc_from_[a] = index_.at(g.arcs[a].from);
    arc_to_[a] = index_.at(g.arcs[a].to);
    out_[arc_from_[a]].push_back(a);
  }
}

std::optional<std::uint32_t> IndexedGraph::find_node(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CostVector path_cost(const IndexedGraph& g, const std::vector<std::uint32_t>& arc_indices) {
  CostVector total = zeros(static_cast<std::size_t>(g.scenarios()));
  std::uint32_t at = g.source();
  for (std::uint32_t a : arc_indices) {
    if (a >= g.arc_count()) throw GraphError("path references arc out of range");
    if (g.arc_from(a) != at) throw GraphError("disconnected arc sequence");
    total = add(total, g.arc_cost(a));
    at = g.arc_to(a);
  }
  return total;
}

Path make_path(const IndexedGraph& g, std::vector<std::uint32_t> arc_indices) {
  Path p;
  p.cost = path_cost(g, arc_indices);
  p.arcs = std::move(arc_indices);
  return p;
}

std::vector<std::string> path_nodes(const IndexedGraph& g, const Path& p) {
  std::vector<std::string> names{g.node_name(g.source())};
  for (std::uint32_t a : p.arcs) names.push_back(g.node_name(g.arc_to(a)));
  return names;
}

}  // namespace lorpath
