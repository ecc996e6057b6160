#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lorpath/errors.hpp"

namespace lorpath {

/// Costs are non-negative integers (fixed-point units chosen by the caller),
/// one component per scenario.
using Cost = std::int64_t;
using CostVector = std::vector<Cost>;

CostVector add(const CostVector& a, const CostVector& b);
Cost sum_of(const CostVector& v);
Cost max_of(const CostVector& v);
CostVector zeros(std::size_t m);
std::string format_costs(const CostVector& v);  // "[5,3]"

struct ArcSpec {
  std::string from;
  std::string to;
  CostVector cost;
  bool operator==(const ArcSpec&) const = default;
};

/// Directed graph with one cost vector per arc. Plain data: construction does
/// not validate; see validate_graph / IndexedGraph.
struct ScenarioGraph {
  int scenario_count = 0;
  std::vector<std::string> nodes;  // iteration order = input order
  std::string source;
  std::vector<std::string> goals;
  std::vector<ArcSpec> arcs;
  std::string meta_json;  // optional generator metadata (compact JSON), kept on round-trip
  bool operator==(const ScenarioGraph&) const = default;
};

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> violations;
  bool strictly_positive = false;  // every arc component > 0 (meaningful when ok)
  bool is_dag = false;             // meaningful when ok
};

ValidationReport validate_graph(const ScenarioGraph& g);

/// Index-resolved read-only view used by the search and the oracle.
/// Construction throws GraphError when validate_graph reports violations.
/// Immutable afterwards; safe to share across concurrent readers.
class IndexedGraph {
 public:
  explicit IndexedGraph(const ScenarioGraph& g);

  const ScenarioGraph& spec() const { return *graph_; }
  int scenarios() const { return graph_->scenario_count; }
  std::uint32_t node_count() const { return static_cast<std::uint32_t>(graph_->nodes.size()); }
  const std::string& node_name(std::uint32_t n) const { return graph_->nodes[n]; }
  std::uint32_t source() const { return source_; }
  const std::vector<std::uint32_t>& goals() const { return goals_; }
  bool is_goal(std::uint32_t n) const { return is_goal_[n] != 0; }

  std::uint32_t arc_count() const { return static_cast<std::uint32_t>(graph_->arcs.size()); }
  std::uint32_t arc_from(std::uint32_t a) const { return arc_from_[a]; }
  std::uint32_t arc_to(std::uint32_t a) const { return arc_to_[a]; }
  const CostVector& arc_cost(std::uint32_t a) const { return graph_->arcs[a].cost; }
  const std::vector<std::uint32_t>& out_arcs(std::uint32_t n) const { return out_[n]; }

  bool strictly_positive() const { return strictly_positive_; }
  bool is_dag() const { return is_dag_; }
  /// Cyclic graphs are searchable only when every arc component is positive.
  bool searchable() const { return is_dag_ || strictly_positive_; }

  std::optional<std::uint32_t> find_node(std::string_view name) const;

 private:
  const ScenarioGraph* graph_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> arc_from_;
  std::vector<std::uint32_t> arc_to_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<char> is_goal_;
  std::vector<std::uint32_t> goals_;
  std::uint32_t source_ = 0;
  bool strictly_positive_ = false;
  bool is_dag_ = false;
};

/// A walk from the source, stored as arc indices into the owning graph.
/// The cost field always equals the recomputed arc-cost sum.
struct Path {
  std::vector<std::uint32_t> arcs;
  CostVector cost;
  bool operator==(const Path&) const = default;
};

/// Sums arc costs after checking the indices form a walk starting at the
/// source; throws GraphError on a disconnected sequence. An empty sequence
/// yields the zero vector.
CostVector path_cost(const IndexedGraph& g, const std::vector<std::uint32_t>& arc_indices);

Path make_path(const IndexedGraph& g, std::vector<std::uint32_t> arc_indices);

std::vector<std::string> path_nodes(const IndexedGraph& g, const Path& p);

}  // namespace lorpath
