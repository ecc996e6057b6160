#pragma once

#include <cstdint>
#include <vector>

#include "lorpath/model.hpp"

namespace lorpath::instances {

/// Two-scenario example used throughout the tests: nodes a,b,c,d,g1,g2,
/// source a, goals g1 and g2, eleven solution paths.
ScenarioGraph figure1();

/// p-stage chain where stage i offers parallel arcs (2^{i-1},0) and
/// (0,2^{i-1}); the 2^p path costs are exactly {(x, 2^p-1-x)}. Every path is
/// Pareto-non-dominated but a single Lorenz class remains. Requires 1<=p<=20.
ScenarioGraph hansen(int p);

/// p stages with arcs (2^i,0) and (0,2^{i-1}) plus a final arc (0,2^{p+1}+1);
/// path costs {(2x, 3*2^p - x)}, whose 2^p Lorenz vectors are pairwise
/// incomparable. Requires 1<=p<=20.
ScenarioGraph antilorenz(int p);

struct PartitionInstance {
  ScenarioGraph graph;
  CostVector target;        // (S/2, S/2) over the possibly doubled sizes
  bool doubled = false;     // sizes were scaled x2 because their sum was odd
  std::vector<Cost> sizes;  // sizes actually used
};

/// One stage per item with parallel arcs (s,0)/(0,s); a path cost weakly
/// Lorenz-dominates the target iff the items split into two equal halves.
PartitionInstance partition_reduction(std::vector<Cost> sizes);

struct RandomGraphParams {
  int nodes = 8;
  double arc_density = 0.5;  // in (0,1]
  int cost_min = 1;          // cost range within [1,99]
  int cost_max = 9;
  int scenarios = 2;
  std::uint64_t seed = 0;
};

/// Seeded layered DAG: source is the first node, goals are the final layer,
/// all costs strictly positive. Identical parameters produce byte-identical
/// canonical JSON.
ScenarioGraph random_graph(const RandomGraphParams& params);

}  // namespace lorpath::instances
