#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lorpath/instances.hpp"
#include "lorpath/json_io.hpp"
#include "lorpath/oracle.hpp"

using namespace lorpath;

namespace {

std::set<CostVector> path_costs(const ScenarioGraph& spec) {
  const IndexedGraph g(spec);
  std::set<CostVector> out;
  for (const auto& p : oracle::enumerate_paths(g)) out.insert(p.path.cost);
  return out;
}

}  // namespace

TEST_CASE("figure1 arc table") {
  const ScenarioGraph g = instances::figure1();
  CHECK(g.scenario_count == 2);
  CHECK(g.nodes == std::vector<std::string>{"a", "b", "c", "d", "g1", "g2"});
  CHECK(g.source == "a");
  CHECK(g.goals == std::vector<std::string>{"g1", "g2"});
  REQUIRE(g.arcs.size() == 10);
  CHECK(g.arcs[0] == ArcSpec{"a", "b", {5, 3}});
  CHECK(g.arcs[9] == ArcSpec{"c", "g2", {1, 2}});

  const IndexedGraph ig(g);
  CHECK(path_cost(ig, {0, 4, 8}) == CostVector{12, 6});  // a,b,c,g1
  CHECK(path_cost(ig, {1, 8}) == CostVector{13, 5});     // a,c,g1
}

TEST_CASE("hansen cost sets follow the closed form") {
  CHECK(path_costs(instances::hansen(1)) == std::set<CostVector>{{0, 1}, {1, 0}});

  const auto p3 = path_costs(instances::hansen(3));
  std::set<CostVector> expected;
  for (Cost x = 0; x <= 7; ++x) expected.insert({x, 7 - x});
  CHECK(p3 == expected);

  CHECK_THROWS_AS(instances::hansen(0), ArgumentError);
  CHECK_THROWS_AS(instances::hansen(21), ArgumentError);
}

TEST_CASE("antilorenz cost sets follow the closed form") {
  CHECK(path_costs(instances::antilorenz(1)) == std::set<CostVector>{{0, 6}, {2, 5}});

  const auto p3 = path_costs(instances::antilorenz(3));
  std::set<CostVector> expected;
  for (Cost x = 0; x <= 7; ++x) expected.insert({2 * x, 24 - x});
  CHECK(p3 == expected);

  // Pairwise Lorenz-incomparable by construction.
  const std::vector<CostVector> costs(p3.begin(), p3.end());
  for (std::size_t i = 0; i < costs.size(); ++i) {
    for (std::size_t j = 0; j < costs.size(); ++j) {
      if (i != j) CHECK_FALSE(lorenz_weakly_dominates(costs[i], costs[j]));
    }
  }
}

TEST_CASE("partition reduction") {
  const auto inst = instances::partition_reduction({3, 1, 2});
  CHECK_FALSE(inst.doubled);
  CHECK(inst.target == CostVector{3, 3});
  CHECK(inst.graph.nodes.size() == 4);  // three stages
  CHECK(inst.graph.arcs.size() == 6);
  CHECK(inst.graph.meta_json.find("\"target\":[3,3]") != std::string::npos);

  const auto odd = instances::partition_reduction({1});
  CHECK(odd.doubled);
  CHECK(odd.sizes == std::vector<Cost>{2});
  CHECK(odd.target == CostVector{1, 1});

  CHECK_THROWS_AS(instances::partition_reduction({}), ArgumentError);
  CHECK_THROWS_AS(instances::partition_reduction({0, 2}), ArgumentError);
}

TEST_CASE("random graphs are reproducible and well formed") {
  instances::RandomGraphParams params;
  params.nodes = 12;
  params.arc_density = 0.5;
  params.scenarios = 3;
  params.seed = 7;
  const ScenarioGraph a = instances::random_graph(params);
  const ScenarioGraph b = instances::random_graph(params);
  CHECK(graph_to_json(a) == graph_to_json(b));

  const auto report = validate_graph(a);
  CHECK(report.ok);
  CHECK(report.is_dag);
  CHECK(report.strictly_positive);

  params.seed = 8;
  CHECK(graph_to_json(instances::random_graph(params)) != graph_to_json(a));
}

TEST_CASE("random graph parameter validation") {
  instances::RandomGraphParams params;
  params.nodes = 1;
  CHECK_THROWS_AS(instances::random_graph(params), ArgumentError);
  params.nodes = 4;
  params.arc_density = 0.0;
  CHECK_THROWS_AS(instances::random_graph(params), ArgumentError);
  params.arc_density = 1.5;
  CHECK_THROWS_AS(instances::random_graph(params), ArgumentError);
  params.arc_density = 0.5;
  params.cost_min = 0;
  CHECK_THROWS_AS(instances::random_graph(params), ArgumentError);
  params.cost_min = 1;
  params.cost_max = 100;
  CHECK_THROWS_AS(instances::random_graph(params), ArgumentError);
}

TEST_CASE("two nodes at full density carry a single arc") {
  instances::RandomGraphParams params;
  params.nodes = 2;
  params.arc_density = 1.0;
  params.seed = 3;
  const ScenarioGraph g = instances::random_graph(params);
  CHECK(g.arcs.size() == 1);
  const IndexedGraph ig(g);
  CHECK(oracle::enumerate_paths(ig).size() == 1);
}

TEST_CASE("every node reaches a goal in generated DAGs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    instances::RandomGraphParams params;
    params.nodes = 4 + static_cast<int>(seed % 9);
    params.arc_density = 0.4;
    params.seed = seed;
    const ScenarioGraph spec = instances::random_graph(params);
    const IndexedGraph g(spec);
    // Forward links are mandatory per layer, so enumeration finds a path.
    CHECK(!oracle::enumerate_paths(g).empty());
  }
}
