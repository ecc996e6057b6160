#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lorpath/dominance.hpp"
#include "lorpath/model.hpp"
#include "lorpath/owa.hpp"

namespace lorpath::oracle {

/// Enumeration is restricted to simple paths; with a cyclic graph that is only
/// exact when every arc component is positive, which IndexedGraph::searchable
/// already enforces. simple_only = false is unsupported and throws.
struct EnumerationLimits {
  std::uint64_t max_paths = 1'000'000;
  bool simple_only = true;
};

struct PathRecord {
  Path path;
  std::vector<std::string> nodes;
};

/// All simple source-to-goal paths in depth-first order over input arc order.
/// Throws LimitError when max_paths is exceeded.
std::vector<PathRecord> enumerate_paths(const IndexedGraph& g, const EnumerationLimits& limits = {});

/// For pareto_set, class_size counts enumerated paths sharing the cost vector;
/// for lorenz_set it counts distinct cost vectors in the Lorenz class.
struct FrontierEntry {
  CostVector cost;
  LorenzVector lorenz;
  PathRecord witness;
  std::size_t class_size = 1;
};

/// Pareto-non-dominated path costs, witnesses in enumeration order.
std::vector<FrontierEntry> pareto_set(const IndexedGraph& g, const EnumerationLimits& limits = {});

/// Lorenz-non-dominated classes with their earliest witnesses, lex-increasing.
std::vector<FrontierEntry> lorenz_set(const IndexedGraph& g, const EnumerationLimits& limits = {});

struct OwaOptimum {
  std::optional<PathRecord> path;  // empty when no goal is reachable
  Rational value;
};

/// Minimizes owa_value over all enumerated paths; ties keep the earliest.
OwaOptimum owa_optimum(const IndexedGraph& g, const OwaWeights& w,
                       const EnumerationLimits& limits = {});

struct Decision {
  bool exists = false;
  std::optional<PathRecord> witness;
};

/// True iff some enumerated path cost weakly Lorenz-dominates target
/// (equality of Lorenz vectors counts). Witness is the first such path.
Decision decide_lorenz_dominating_path(const IndexedGraph& g, const CostVector& target,
                                       const EnumerationLimits& limits = {});

}  // namespace lorpath::oracle
