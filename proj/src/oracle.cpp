#include "lorpath/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lorpath::oracle {

namespace {

void check_enumerable(const IndexedGraph& g, const EnumerationLimits& limits) {
  if (!limits.simple_only) throw ArgumentError("non-simple enumeration is unsupported");
  if (limits.max_paths < 1) throw ArgumentError("max_paths must be at least 1");
  if (!g.searchable()) {
    throw GraphError("cyclic graph with zero-cost components is not enumerable");
  }
}

PathRecord record_of(const IndexedGraph& g, const std::vector<std::uint32_t>& arcs) {
  PathRecord r;
  r.path = make_path(g, arcs);
  r.nodes = path_nodes(g, r.path);
  return r;
}

}  // namespace

std::vector<PathRecord> enumerate_paths(const IndexedGraph& g, const EnumerationLimits& limits) {
  check_enumerable(g, limits);
  std::vector<PathRecord> out;
  std::vector<char> on_path(g.node_count(), 0);
  std::vector<std::uint32_t> arcs;

  // Iterative DFS in input arc order; a frame is (node, next out-arc slot).
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  const auto visit = [&](std::uint32_t node) {
    if (g.is_goal(node)) {
      if (out.size() >= limits.max_paths) {
        throw LimitError("path cap exceeded (" + std::to_string(limits.max_paths) + ")");
      }
      out.push_back(record_of(g, arcs));
    }
    on_path[node] = 1;
    stack.emplace_back(node, 0);
  };
  visit(g.source());
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    bool descended = false;
    while (next < g.out_arcs(node).size()) {
      const std::uint32_t a = g.out_arcs(node)[next++];
      const std::uint32_t to = g.arc_to(a);
      if (on_path[to]) continue;
      arcs.push_back(a);
      visit(to);
      descended = true;
      break;
    }
    if (!descended) {
      on_path[node] = 0;
      stack.pop_back();
      if (!arcs.empty()) arcs.pop_back();
    }
  }
  return out;
}

std::vector<FrontierEntry> pareto_set(const IndexedGraph& g, const EnumerationLimits& limits) {
  const auto paths = enumerate_paths(g, limits);
  std::vector<CostVector> costs;
  costs.reserve(paths.size());
  for (const auto& p : paths) costs.push_back(p.path.cost);

  std::vector<FrontierEntry> out;
  for (std::size_t i : pareto_filter_indices(costs)) {
    FrontierEntry e;
    e.cost = costs[i];
    e.lorenz = lorenz_vector(costs[i]);
    e.witness = paths[i];
    e.class_size = static_cast<std::size_t>(std::count(costs.begin(), costs.end(), costs[i]));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FrontierEntry> lorenz_set(const IndexedGraph& g, const EnumerationLimits& limits) {
  const auto paths = enumerate_paths(g, limits);
  std::vector<CostVector> costs;
  costs.reserve(paths.size());
  for (const auto& p : paths) costs.push_back(p.path.cost);

  std::vector<FrontierEntry> out;
  for (const auto& cls : lorenz_frontier(costs)) {
    FrontierEntry e;
    e.cost = costs[cls.representative];
    e.lorenz = cls.lorenz;
    e.witness = paths[cls.representative];
    e.class_size = cls.distinct_costs;
    out.push_back(std::move(e));
  }
  return out;
}

OwaOptimum owa_optimum(const IndexedGraph& g, const OwaWeights& w, const EnumerationLimits& limits) {
  if (w.dimension() != g.scenarios()) {
    throw ArgumentError("weight dimension does not match scenario count");
  }
  OwaOptimum best;
  for (const auto& p : enumerate_paths(g, limits)) {
    const Rational value = owa_value(p.path.cost, w);
    if (!best.path || value < best.value) {
      best.path = p;
      best.value = value;
    }
  }
  return best;
}

Decision decide_lorenz_dominating_path(const IndexedGraph& g, const CostVector& target,
                                       const EnumerationLimits& limits) {
  if (static_cast<int>(target.size()) != g.scenarios()) {
    throw ArgumentError("target dimension does not match scenario count");
  }
  const LorenzVector bound = lorenz_vector(target);
  Decision d;
  for (const auto& p : enumerate_paths(g, limits)) {
    if (weak_pareto_dominates(lorenz_vector(p.path.cost), bound)) {
      d.exists = true;
      d.witness = p;
      break;
    }
  }
  return d;
}

}  // namespace lorpath::oracle
