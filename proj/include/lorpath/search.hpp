#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorpath/dominance.hpp"
#include "lorpath/model.hpp"
#include "lorpath/owa.hpp"

namespace lorpath {

enum class HeuristicKind { zero, arc, ideal_point };

HeuristicKind heuristic_kind_from_name(std::string_view name);  // "zero" | "arc" | "ideal"
std::string_view heuristic_kind_name(HeuristicKind kind);

/// Per-node admissible set H(n) of vector-valued lower bounds: for every
/// Pareto-non-dominated cost c of a path from n to a goal, some h in H(n)
/// satisfies h <= c componentwise. Goal nodes always hold the zero vector.
struct HeuristicTable {
  HeuristicKind kind = HeuristicKind::zero;
  std::vector<std::vector<CostVector>> sets;  // indexed like IndexedGraph nodes
  std::vector<char> reachable;  // ideal_point marks nodes that cannot reach a goal
};

/// zero: H(n) = {0}. arc: Pareto-minimal outgoing arc costs (goals and dead
/// ends get {0}). ideal_point: singleton of per-scenario shortest distances
/// to the nearest goal, from m backward scalar sweeps; nodes that cannot
/// reach a goal are flagged unreachable and never receive labels.
HeuristicTable build_heuristic(const IndexedGraph& g, HeuristicKind kind);

enum class SearchMode { lorenz, owa, pareto };
enum class LabelStatus { open, expanded, pruned };

struct SearchStatistics {
  std::uint64_t labels_created = 0;
  std::uint64_t labels_expanded = 0;
  std::uint64_t pruned_rule1 = 0;  // dominated by (or equal to) a detected solution
  std::uint64_t pruned_rule2 = 0;  // Pareto-dominated by (or equal to) a label at the same node
  std::uint64_t sum_bound_fast_hits = 0;
};

struct Solution {
  std::vector<std::string> nodes;
  CostVector cost;
  LorenzVector lorenz;
  std::optional<Rational> owa;
};

struct TraceRow {
  std::string node;
  CostVector g;
  LorenzVector f;
};

/// rule 1 records the first detected solution whose Lorenz vector covers the
/// label's lex-best evaluation member (against = that Lorenz's cum values);
/// rule 2 records the dominating accumulated cost at the same node.
struct PruneRecord {
  std::string node;
  CostVector g;
  int rule = 0;
  std::vector<Cost> against;
};

struct LabelSnapshot {
  std::uint32_t id;
  std::string node;
  CostVector g;
  LorenzVector f;
  std::optional<std::uint32_t> predecessor;
  LabelStatus status;
};

/// Toggles exist for the pruning-safety tests; output filtering at goal nodes
/// (one representative per Lorenz class) is part of the contract and is not
/// affected. Disabling rule2 on a cyclic graph is rejected.
struct SearchOptions {
  bool rule1 = true;
  bool rule2 = true;
  bool sum_bound_fast_path = true;
  bool keep_labels = false;
};

struct SearchResult {
  SearchMode mode = SearchMode::lorenz;
  std::vector<Solution> solutions;
  SearchStatistics stats;
  std::vector<TraceRow> trace;        // expanded labels in order, when requested
  std::vector<PruneRecord> prunes;    // when trace requested
  std::vector<LabelSnapshot> labels;  // when options.keep_labels
  std::optional<Rational> owa_value;
  std::optional<Rational> next_open_value;  // owa: best open priority at termination
};

/// Best-first label expansion ordered lexicographically on Lorenz evaluations.
/// Returns one path per Lorenz-non-dominated class of source-to-goal costs,
/// in lex-increasing (detection) order. Requires g.searchable().
SearchResult search_lorenz(const IndexedGraph& g, const HeuristicTable& h, bool trace = false,
                           const SearchOptions& options = {});

/// Same engine with solution-dominance pruning off and Pareto filtering of the
/// goal labels; baseline for frontier-size comparisons.
SearchResult search_pareto(const IndexedGraph& g, const HeuristicTable& h, bool trace = false,
                           const SearchOptions& options = {});

/// Priority min over {phi(L(g+h))}; the first goal label popped is optimal and
/// the search stops once the best open priority reaches the incumbent value.
/// No reachable goal yields an empty solutions list.
SearchResult search_owa(const IndexedGraph& g, const OwaWeights& w, const HeuristicTable& h,
                        bool trace = false, const SearchOptions& options = {});

}  // namespace lorpath
