#include "lorpath/instances.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "json.hpp"

namespace lorpath::instances {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string node_id(const char* prefix, int i) { return prefix + std::to_string(i); }

void check_stage_count(int p) {
  if (p < 1 || p > 20) throw ArgumentError("stage count p must be within [1, 20]");
}

}  // namespace

ScenarioGraph figure1() {
  ScenarioGraph g;
  g.scenario_count = 2;
  g.nodes = {"a", "b", "c", "d", "g1", "g2"};
  g.source = "a";
  g.goals = {"g1", "g2"};
  g.arcs = {
      {"a", "b", {5, 3}},  {"a", "c", {10, 4}}, {"a", "d", {2, 6}},  {"b", "g1", {4, 6}},
      {"b", "c", {4, 2}},  {"b", "d", {1, 3}},  {"d", "c", {1, 4}},  {"d", "g2", {3, 5}},
      {"c", "g1", {3, 1}}, {"c", "g2", {1, 2}},
  };
  ordered_json meta;
  meta["family"] = "figure1";
  g.meta_json = meta.dump();
  return g;
}

ScenarioGraph hansen(int p) {
  check_stage_count(p);
  ScenarioGraph g;
  g.scenario_count = 2;
  for (int i = 0; i <= p; ++i) g.nodes.push_back(node_id("h", i));
  g.source = g.nodes.front();
  g.goals = {g.nodes.back()};
  Cost power = 1;
  for (int i = 1; i <= p; ++i, power *= 2) {
    g.arcs.push_back({g.nodes[i - 1], g.nodes[i], {power, 0}});
    g.arcs.push_back({g.nodes[i - 1], g.nodes[i], {0, power}});
  }
  ordered_json meta;
  meta["family"] = "hansen";
  meta["p"] = p;
  meta["paths"] = std::int64_t(1) << p;
  meta["pareto_size"] = std::int64_t(1) << p;
  meta["lorenz_classes"] = 1;
  g.meta_json = meta.dump();
  return g;
}

ScenarioGraph antilorenz(int p) {
  check_stage_count(p);
  ScenarioGraph g;
  g.scenario_count = 2;
  for (int i = 0; i <= p; ++i) g.nodes.push_back(node_id("v", i));
  g.nodes.push_back("t");
  g.source = g.nodes.front();
  g.goals = {"t"};
  Cost power = 1;  // 2^{i-1} for stage i
  for (int i = 1; i <= p; ++i, power *= 2) {
    g.arcs.push_back({g.nodes[i - 1], g.nodes[i], {2 * power, 0}});
    g.arcs.push_back({g.nodes[i - 1], g.nodes[i], {0, power}});
  }
  g.arcs.push_back({g.nodes[static_cast<std::size_t>(p)], "t", {0, (Cost(1) << (p + 1)) + 1}});
  ordered_json meta;
  meta["family"] = "antilorenz";
  meta["p"] = p;
  meta["paths"] = std::int64_t(1) << p;
  meta["lorenz_classes"] = std::int64_t(1) << p;
  g.meta_json = meta.dump();
  return g;
}

PartitionInstance partition_reduction(std::vector<Cost> sizes) {
  if (sizes.empty()) throw ArgumentError("partition instance needs at least one size");
  for (Cost s : sizes) {
    if (s <= 0) throw ArgumentError("partition sizes must be positive");
  }
  PartitionInstance inst;
  Cost total = 0;
  for (Cost s : sizes) total += s;
  if (total % 2 != 0) {
    for (Cost& s : sizes) s *= 2;
    total *= 2;
    inst.doubled = true;
  }
  inst.sizes = sizes;
  inst.target = {total / 2, total / 2};

  ScenarioGraph& g = inst.graph;
  g.scenario_count = 2;
  const int p = static_cast<int>(sizes.size());
  for (int i = 0; i <= p; ++i) g.nodes.push_back(node_id("q", i));
  g.source = g.nodes.front();
  g.goals = {g.nodes.back()};
  for (int i = 1; i <= p; ++i) {
    const Cost s = sizes[static_cast<std::size_t>(i - 1)];
    g.arcs.push_back({g.nodes[i - 1], g.nodes[i], {s, 0}});
    g.arcs.push_back({g.nodes[i - 1], g.nodes[i], {0, s}});
  }
  ordered_json meta;
  meta["family"] = "partition";
  meta["sizes"] = sizes;
  meta["doubled"] = inst.doubled;
  meta["target"] = inst.target;
  g.meta_json = meta.dump();
  return inst;
}

namespace {

// Draws stay on the raw engine; std::uniform_int_distribution is not
// bit-portable across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

bool chance(std::mt19937_64& rng, double probability) {
  return double(rng() >> 11) * 0x1.0p-53 < probability;
}

std::string density_string(double d) {
  std::string s = std::to_string(d);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

ScenarioGraph random_graph(const RandomGraphParams& params) {
  if (params.nodes < 2) throw ArgumentError("random graph needs at least 2 nodes");
  if (!(params.arc_density > 0.0) || params.arc_density > 1.0) {
    throw ArgumentError("arc density must be in (0, 1]");
  }
  if (params.cost_min < 1 || params.cost_max > 99 || params.cost_min > params.cost_max) {
    throw ArgumentError("cost range must satisfy 1 <= min <= max <= 99");
  }
  if (params.scenarios < 1) throw ArgumentError("scenario count must be at least 1");

  std::mt19937_64 rng(params.seed);
  const int n = params.nodes;
  const int extra = n - 2;
  const int inner = extra == 0 ? 0 : 1 + static_cast<int>(draw(rng, std::min<std::uint64_t>(
                                              static_cast<std::uint64_t>(extra), 3)));
  const int layer_count = 2 + inner;

  // Seed every layer with one node, then spread the rest over layers >= 1.
  std::vector<int> layer_of(static_cast<std::size_t>(n));
  for (int i = 0; i < layer_count; ++i) layer_of[static_cast<std::size_t>(i)] = i;
  for (int i = layer_count; i < n; ++i) {
    layer_of[static_cast<std::size_t>(i)] =
        1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(layer_count - 1)));
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return layer_of[static_cast<std::size_t>(a)] <
                                              layer_of[static_cast<std::size_t>(b)]; });

  ScenarioGraph g;
  g.scenario_count = params.scenarios;
  std::vector<int> layer(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> members(static_cast<std::size_t>(layer_count));
  for (int i = 0; i < n; ++i) {
    g.nodes.push_back(node_id("n", i));
    layer[static_cast<std::size_t>(i)] = layer_of[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    members[static_cast<std::size_t>(layer[static_cast<std::size_t>(i)])].push_back(i);
  }
  g.source = g.nodes.front();
  for (int v : members.back()) g.goals.push_back(g.nodes[static_cast<std::size_t>(v)]);

  std::set<std::pair<int, int>> present;
  const auto draw_cost = [&] {
    CostVector c(static_cast<std::size_t>(params.scenarios));
    for (auto& x : c) {
      x = params.cost_min +
          static_cast<Cost>(draw(rng, static_cast<std::uint64_t>(params.cost_max - params.cost_min + 1)));
    }
    return c;
  };
  const auto link = [&](int u, int v) {
    present.emplace(u, v);
    g.arcs.push_back({g.nodes[static_cast<std::size_t>(u)], g.nodes[static_cast<std::size_t>(v)],
                      draw_cost()});
  };

  // Every non-final node feeds forward; every non-source node is fed.
  for (int u = 0; u < n; ++u) {
    if (layer[static_cast<std::size_t>(u)] == layer_count - 1) continue;
    const auto& next = members[static_cast<std::size_t>(layer[static_cast<std::size_t>(u)] + 1)];
    link(u, next[draw(rng, next.size())]);
  }
  for (int v = 0; v < n; ++v) {
    if (layer[static_cast<std::size_t>(v)] == 0) continue;
    bool fed = false;
    for (const auto& [a, b] : present) fed = fed || b == v;
    if (!fed) {
      const auto& prev = members[static_cast<std::size_t>(layer[static_cast<std::size_t>(v)] - 1)];
      link(prev[draw(rng, prev.size())], v);
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (layer[static_cast<std::size_t>(u)] >= layer[static_cast<std::size_t>(v)]) continue;
      if (present.contains({u, v})) continue;
      if (chance(rng, params.arc_density)) link(u, v);
    }
  }

  ordered_json meta;
  meta["family"] = "random";
  meta["nodes"] = params.nodes;
  meta["density"] = density_string(params.arc_density);
  meta["cost_min"] = params.cost_min;
  meta["cost_max"] = params.cost_max;
  meta["scenarios"] = params.scenarios;
  meta["seed"] = params.seed;
  g.meta_json = meta.dump();
  return g;
}

}  // namespace lorpath::instances
