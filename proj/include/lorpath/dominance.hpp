#pragma once

#include <cstddef>
#include <vector>

#include "lorpath/model.hpp"

namespace lorpath {

/// Cumulative sums of a cost vector's components sorted in decreasing order.
/// cum is non-decreasing with concave increments; cum.front() is the worst
/// single-scenario cost, cum.back() the total.
struct LorenzVector {
  std::vector<Cost> cum;
  bool operator==(const LorenzVector&) const = default;
  bool operator<(const LorenzVector& o) const { return cum < o.cum; }  // container order, for sets
};

LorenzVector lorenz_vector(const CostVector& x);

// x weakly Pareto-dominates y: componentwise x_i <= y_i.
bool weak_pareto_dominates(const CostVector& x, const CostVector& y);
bool weak_pareto_dominates(const LorenzVector& x, const LorenzVector& y);
// Strict: weak dominance and x != y.
bool pareto_dominates(const CostVector& x, const CostVector& y);

bool lorenz_weakly_dominates(const CostVector& x, const CostVector& y);
bool lorenz_strictly_dominates(const CostVector& x, const CostVector& y);

/// `less` means the better (preferred) evaluation; a strict total order on
/// Lorenz vectors of equal dimension.
enum class LexOrder { less, equal, greater };
LexOrder lex_compare(const LorenzVector& a, const LorenzVector& b);

enum class Relation {
  strictly_dominates,
  equivalent,  // weak dominance both ways
  incomparable,
  strictly_dominated,
};
Relation pareto_relation(const CostVector& x, const CostVector& y);
Relation lorenz_relation(const CostVector& x, const CostVector& y);

/// Moves eps from component i to component j (0-based). Requires x[i] > x[j]
/// and 0 <= eps <= x[i] - x[j]; throws ArgumentError otherwise.
CostVector pigou_dalton_transfer(const CostVector& x, std::size_t i, std::size_t j, Cost eps);

/// Sufficient test: sum(y) > m * max(x) guarantees x strictly Lorenz-dominates
/// y. False is inconclusive, not a non-dominance claim.
bool sum_bound_dominates(const CostVector& x, const CostVector& y);

/// Elements not strictly Pareto-dominated by another element; duplicates
/// collapse to the earliest occurrence. Result preserves input order.
std::vector<std::size_t> pareto_filter_indices(const std::vector<CostVector>& xs);
std::vector<CostVector> pareto_filter(const std::vector<CostVector>& xs);

/// One entry per non-dominated Lorenz vector. representative is the smallest
/// input index attaining it; distinct_costs counts the distinct cost vectors
/// sharing it. Entries are ordered lex-increasing.
struct LorenzClass {
  LorenzVector lorenz;
  std::size_t representative;
  std::size_t distinct_costs;
};
std::vector<LorenzClass> lorenz_frontier(const std::vector<CostVector>& xs);

/// Representatives of lorenz_frontier, in input order.
std::vector<CostVector> lorenz_filter(const std::vector<CostVector>& xs);

}  // namespace lorpath
