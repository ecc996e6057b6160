#include "lorpath.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lorpath/instances.hpp"
#include "lorpath/json_io.hpp"
#include "lorpath/oracle.hpp"
#include "lorpath/report.hpp"
#include "lorpath/search.hpp"

struct lorpath_graph {
  lorpath::ScenarioGraph spec;
  std::unique_ptr<const lorpath::IndexedGraph> indexed;  // null when spec is invalid
};

struct lorpath_report {
  std::string json;
};

namespace {

thread_local std::string t_last_error;

struct IoError : lorpath::Error {
  using Error::Error;
};

lorpath_status failure(lorpath_status status, const std::string& message) {
  t_last_error = message;
  return status;
}

template <typename Fn>
lorpath_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return LORPATH_OK;
  } catch (const lorpath::ArgumentError& e) {
    return failure(LORPATH_ERR_ARGUMENT, e.what());
  } catch (const lorpath::ParseError& e) {
    return failure(LORPATH_ERR_GRAPH, e.what());
  } catch (const lorpath::GraphError& e) {
    return failure(LORPATH_ERR_GRAPH, e.what());
  } catch (const lorpath::WeightError& e) {
    return failure(LORPATH_ERR_WEIGHTS, e.what());
  } catch (const lorpath::LimitError& e) {
    return failure(LORPATH_ERR_LIMIT, e.what());
  } catch (const IoError& e) {
    return failure(LORPATH_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return failure(LORPATH_ERR_INTERNAL, e.what());
  }
}

lorpath_graph* adopt(lorpath::ScenarioGraph&& spec) {
  auto handle = std::make_unique<lorpath_graph>();
  handle->spec = std::move(spec);
  if (lorpath::validate_graph(handle->spec).ok) {
    handle->indexed = std::make_unique<lorpath::IndexedGraph>(handle->spec);
  }
  return handle.release();
}

const lorpath::IndexedGraph& indexed_or_throw(const lorpath_graph* graph) {
  if (!graph) throw lorpath::ArgumentError("graph handle is null");
  if (!graph->indexed) {
    const auto report = lorpath::validate_graph(graph->spec);
    std::string msg = "invalid graph:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw lorpath::GraphError(msg);
  }
  return *graph->indexed;
}

lorpath_report* wrap_report(std::string json) {
  auto r = std::make_unique<lorpath_report>();
  r->json = std::move(json);
  return r.release();
}

std::vector<lorpath::Rational> parse_rational_csv(const char* csv, const char* what) {
  std::vector<lorpath::Rational> out;
  std::string text = csv ? csv : "";
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) out.push_back(lorpath::Rational::parse(item));
  } catch (const lorpath::ParseError& e) {
    throw lorpath::WeightError(std::string(what) + ": " + e.what());
  }
  if (out.empty()) throw lorpath::WeightError(std::string(what) + ": empty list");
  return out;
}

lorpath::CostVector parse_cost_csv(const char* csv, const char* what) {
  lorpath::CostVector out;
  std::string text = csv ? csv : "";
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const lorpath::Rational r = lorpath::Rational::parse(item);
    if (!r.is_integer()) throw lorpath::ArgumentError(std::string(what) + ": expected integers");
    out.push_back(r.numerator());
  }
  if (out.empty()) throw lorpath::ArgumentError(std::string(what) + ": empty list");
  return out;
}

// phi and weights are mutually exclusive forms of the same input.
std::unique_ptr<lorpath::OwaWeights> parse_weight_args(const char* phi_csv, const char* weights_csv,
                                                       bool required) {
  const bool has_phi = phi_csv && *phi_csv;
  const bool has_weights = weights_csv && *weights_csv;
  if (has_phi && has_weights) {
    throw lorpath::ArgumentError("give either phi or weights, not both");
  }
  if (!has_phi && !has_weights) {
    if (required) throw lorpath::ArgumentError("owa mode requires phi or weights");
    return nullptr;
  }
  if (has_phi) {
    return std::make_unique<lorpath::OwaWeights>(
        lorpath::OwaWeights::from_phi(parse_rational_csv(phi_csv, "phi")));
  }
  return std::make_unique<lorpath::OwaWeights>(
      lorpath::OwaWeights::from_weights(parse_rational_csv(weights_csv, "weights")));
}

lorpath::CostVector target_from_meta(const lorpath_graph* graph) {
  if (graph->spec.meta_json.empty()) {
    throw lorpath::ArgumentError("no target given and graph metadata has none");
  }
  const auto meta = nlohmann::json::parse(graph->spec.meta_json);
  if (!meta.is_object() || !meta.contains("target") || !meta["target"].is_array()) {
    throw lorpath::ArgumentError("no target given and graph metadata has none");
  }
  lorpath::CostVector target;
  for (const auto& v : meta["target"]) target.push_back(v.get<lorpath::Cost>());
  return target;
}

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t cap_or_default(std::uint64_t max_paths) {
  return max_paths == 0 ? lorpath::oracle::EnumerationLimits{}.max_paths : max_paths;
}

std::vector<lorpath::LorenzVector> sorted_unique(std::vector<lorpath::LorenzVector> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

extern "C" {

const char* lorpath_status_name(lorpath_status status) {
  switch (status) {
    case LORPATH_OK: return "ok";
    case LORPATH_ERR_ARGUMENT: return "argument";
    case LORPATH_ERR_GRAPH: return "graph";
    case LORPATH_ERR_WEIGHTS: return "weights";
    case LORPATH_ERR_LIMIT: return "limit";
    case LORPATH_ERR_IO: return "io";
    case LORPATH_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lorpath_last_error(void) { return t_last_error.c_str(); }

lorpath_status lorpath_graph_from_json(const char* json_text, lorpath_graph** out) {
  return guarded([&] {
    if (!json_text || !out) throw lorpath::ArgumentError("null argument");
    *out = adopt(lorpath::graph_from_json(json_text));
  });
}

lorpath_status lorpath_graph_from_file(const char* path, lorpath_graph** out) {
  return guarded([&] {
    if (!path || !out) throw lorpath::ArgumentError("null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + std::string(path) + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = adopt(lorpath::graph_from_json(buffer.str()));
  });
}

lorpath_status lorpath_graph_to_json(const lorpath_graph* graph, char** json_out) {
  return guarded([&] {
    if (!graph || !json_out) throw lorpath::ArgumentError("null argument");
    const std::string text = lorpath::graph_to_json(graph->spec);
    *json_out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!*json_out) throw std::bad_alloc();
    std::memcpy(*json_out, text.c_str(), text.size() + 1);
  });
}

lorpath_status lorpath_graph_validate(const lorpath_graph* graph, lorpath_report** out) {
  return guarded([&] {
    if (!graph || !out) throw lorpath::ArgumentError("null argument");
    *out = wrap_report(
        lorpath::report::render_validation(graph->spec, lorpath::validate_graph(graph->spec)));
  });
}

int lorpath_graph_scenarios(const lorpath_graph* graph) {
  return graph ? graph->spec.scenario_count : 0;
}

size_t lorpath_graph_nodes(const lorpath_graph* graph) {
  return graph ? graph->spec.nodes.size() : 0;
}

size_t lorpath_graph_arcs(const lorpath_graph* graph) { return graph ? graph->spec.arcs.size() : 0; }

void lorpath_graph_free(lorpath_graph* graph) { delete graph; }

lorpath_status lorpath_generate_figure1(lorpath_graph** out) {
  return guarded([&] {
    if (!out) throw lorpath::ArgumentError("null argument");
    *out = adopt(lorpath::instances::figure1());
  });
}

lorpath_status lorpath_generate_hansen(int p, lorpath_graph** out) {
  return guarded([&] {
    if (!out) throw lorpath::ArgumentError("null argument");
    *out = adopt(lorpath::instances::hansen(p));
  });
}

lorpath_status lorpath_generate_antilorenz(int p, lorpath_graph** out) {
  return guarded([&] {
    if (!out) throw lorpath::ArgumentError("null argument");
    *out = adopt(lorpath::instances::antilorenz(p));
  });
}

lorpath_status lorpath_generate_partition(const int64_t* sizes, size_t count, int64_t target_out[2],
                                          lorpath_graph** out) {
  return guarded([&] {
    if (!sizes || !out) throw lorpath::ArgumentError("null argument");
    auto instance = lorpath::instances::partition_reduction(
        std::vector<lorpath::Cost>(sizes, sizes + count));
    if (target_out) {
      target_out[0] = instance.target[0];
      target_out[1] = instance.target[1];
    }
    *out = adopt(std::move(instance.graph));
  });
}

lorpath_status lorpath_generate_random(int nodes, double density, int cost_min, int cost_max,
                                       int scenarios, uint64_t seed, lorpath_graph** out) {
  return guarded([&] {
    if (!out) throw lorpath::ArgumentError("null argument");
    lorpath::instances::RandomGraphParams params;
    params.nodes = nodes;
    params.arc_density = density;
    params.cost_min = cost_min;
    params.cost_max = cost_max;
    params.scenarios = scenarios;
    params.seed = seed;
    *out = adopt(lorpath::instances::random_graph(params));
  });
}

lorpath_status lorpath_search(const lorpath_graph* graph, const char* mode, const char* heuristic,
                              const char* phi_csv, const char* weights_csv, int trace,
                              lorpath_report** out) {
  return guarded([&] {
    if (!mode || !heuristic || !out) throw lorpath::ArgumentError("null argument");
    const lorpath::IndexedGraph& g = indexed_or_throw(graph);
    const std::string mode_name = mode;
    const auto kind = lorpath::heuristic_kind_from_name(heuristic);
    const bool owa = mode_name == "owa";
    if (!owa && mode_name != "lorenz" && mode_name != "pareto") {
      throw lorpath::ArgumentError("unknown mode '" + mode_name + "' (lorenz|owa|pareto)");
    }
    const auto weights = parse_weight_args(phi_csv, weights_csv, owa);
    if (!owa && weights) {
      throw lorpath::ArgumentError("phi/weights are only valid with mode owa");
    }
    Stopwatch watch;
    const auto table = lorpath::build_heuristic(g, kind);
    lorpath::SearchResult result;
    if (owa) {
      result = lorpath::search_owa(g, *weights, table, trace != 0);
    } else if (mode_name == "lorenz") {
      result = lorpath::search_lorenz(g, table, trace != 0);
    } else {
      result = lorpath::search_pareto(g, table, trace != 0);
    }
    *out = wrap_report(lorpath::report::render_search(g, mode_name, heuristic, weights.get(),
                                                      result, trace != 0, watch.elapsed_ms()));
  });
}

lorpath_status lorpath_oracle(const lorpath_graph* graph, const char* mode, const char* target_csv,
                              const char* phi_csv, const char* weights_csv, uint64_t max_paths,
                              lorpath_report** out) {
  return guarded([&] {
    if (!mode || !out) throw lorpath::ArgumentError("null argument");
    const lorpath::IndexedGraph& g = indexed_or_throw(graph);
    const std::string mode_name = mode;
    lorpath::oracle::EnumerationLimits limits;
    limits.max_paths = cap_or_default(max_paths);
    Stopwatch watch;
    if (mode_name == "paths") {
      const auto paths = lorpath::oracle::enumerate_paths(g, limits);
      *out = wrap_report(
          lorpath::report::render_oracle_paths(g, paths, limits.max_paths, watch.elapsed_ms()));
    } else if (mode_name == "pareto" || mode_name == "lorenz") {
      const auto entries = mode_name == "pareto" ? lorpath::oracle::pareto_set(g, limits)
                                                 : lorpath::oracle::lorenz_set(g, limits);
      *out = wrap_report(lorpath::report::render_oracle_frontier(g, mode_name, entries,
                                                                 limits.max_paths,
                                                                 watch.elapsed_ms()));
    } else if (mode_name == "owa") {
      const auto weights = parse_weight_args(phi_csv, weights_csv, true);
      const auto optimum = lorpath::oracle::owa_optimum(g, *weights, limits);
      *out = wrap_report(lorpath::report::render_oracle_owa(g, *weights, optimum, limits.max_paths,
                                                            watch.elapsed_ms()));
    } else if (mode_name == "decide") {
      const lorpath::CostVector target = (target_csv && *target_csv)
                                             ? parse_cost_csv(target_csv, "target")
                                             : target_from_meta(graph);
      const auto decision = lorpath::oracle::decide_lorenz_dominating_path(g, target, limits);
      *out = wrap_report(lorpath::report::render_decide(g, target, decision, limits.max_paths,
                                                        watch.elapsed_ms(), true));
    } else {
      throw lorpath::ArgumentError("unknown oracle mode '" + mode_name +
                                   "' (paths|pareto|lorenz|owa|decide)");
    }
  });
}

lorpath_status lorpath_compare(const lorpath_graph* graph, const char* mode, const char* heuristic,
                               const char* phi_csv, const char* weights_csv, uint64_t max_paths,
                               int* agree_out, lorpath_report** out) {
  return guarded([&] {
    if (!mode || !heuristic || !agree_out || !out) throw lorpath::ArgumentError("null argument");
    const lorpath::IndexedGraph& g = indexed_or_throw(graph);
    const std::string mode_name = mode;
    const auto kind = lorpath::heuristic_kind_from_name(heuristic);
    lorpath::oracle::EnumerationLimits limits;
    limits.max_paths = cap_or_default(max_paths);
    Stopwatch watch;
    const auto table = lorpath::build_heuristic(g, kind);
    lorpath::report::CompareOutcome outcome;

    if (mode_name == "lorenz") {
      const auto result = lorpath::search_lorenz(g, table);
      for (const auto& s : result.solutions) outcome.search_frontier.push_back(s.lorenz);
      for (const auto& e : lorpath::oracle::lorenz_set(g, limits)) {
        outcome.oracle_frontier.push_back(e.lorenz);
      }
      const auto search_sorted = sorted_unique(outcome.search_frontier);
      const auto oracle_sorted = sorted_unique(outcome.oracle_frontier);
      for (const auto& v : oracle_sorted) {
        if (!std::binary_search(search_sorted.begin(), search_sorted.end(), v)) {
          outcome.missing.push_back(v);
        }
      }
      for (const auto& v : search_sorted) {
        if (!std::binary_search(oracle_sorted.begin(), oracle_sorted.end(), v)) {
          outcome.extra.push_back(v);
        }
      }
      outcome.agree = outcome.missing.empty() && outcome.extra.empty() &&
                      outcome.search_frontier.size() == search_sorted.size();
    } else if (mode_name == "owa") {
      const auto weights = parse_weight_args(phi_csv, weights_csv, true);
      outcome.owa_mode = true;
      const auto result = lorpath::search_owa(g, *weights, table);
      const auto optimum = lorpath::oracle::owa_optimum(g, *weights, limits);
      outcome.search_no_path = !result.owa_value.has_value();
      outcome.oracle_no_path = !optimum.path.has_value();
      if (result.owa_value) outcome.search_value = *result.owa_value;
      if (optimum.path) outcome.oracle_value = optimum.value;
      outcome.agree = outcome.search_no_path == outcome.oracle_no_path &&
                      (outcome.search_no_path || outcome.search_value == outcome.oracle_value);
      *agree_out = outcome.agree ? 1 : 0;
      *out = wrap_report(lorpath::report::render_compare(g, mode_name, heuristic, weights.get(),
                                                         outcome, watch.elapsed_ms()));
      return;
    } else {
      throw lorpath::ArgumentError("unknown compare mode '" + mode_name + "' (lorenz|owa)");
    }
    *agree_out = outcome.agree ? 1 : 0;
    *out = wrap_report(lorpath::report::render_compare(g, mode_name, heuristic, nullptr, outcome,
                                                       watch.elapsed_ms()));
  });
}

lorpath_status lorpath_decide(const lorpath_graph* graph, const int64_t* target, size_t target_len,
                              uint64_t max_paths, int* exists_out, lorpath_report** out) {
  return guarded([&] {
    if (!exists_out || !out) throw lorpath::ArgumentError("null argument");
    const lorpath::IndexedGraph& g = indexed_or_throw(graph);
    const lorpath::CostVector bound = (target && target_len > 0)
                                          ? lorpath::CostVector(target, target + target_len)
                                          : target_from_meta(graph);
    lorpath::oracle::EnumerationLimits limits;
    limits.max_paths = cap_or_default(max_paths);
    Stopwatch watch;
    const auto decision = lorpath::oracle::decide_lorenz_dominating_path(g, bound, limits);
    *exists_out = decision.exists ? 1 : 0;
    *out = wrap_report(lorpath::report::render_decide(g, bound, decision, limits.max_paths,
                                                      watch.elapsed_ms(), false));
  });
}

lorpath_status lorpath_dominance(const int64_t* x, size_t x_len, const int64_t* y, size_t y_len,
                                 lorpath_dominance_result* out) {
  return guarded([&] {
    if (!x || !y || !out) throw lorpath::ArgumentError("null argument");
    const lorpath::CostVector vx(x, x + x_len);
    const lorpath::CostVector vy(y, y + y_len);
    out->weak_pareto = lorpath::weak_pareto_dominates(vx, vy) ? 1 : 0;
    out->pareto = lorpath::pareto_dominates(vx, vy) ? 1 : 0;
    out->weak_lorenz = lorpath::lorenz_weakly_dominates(vx, vy) ? 1 : 0;
    out->strict_lorenz = lorpath::lorenz_strictly_dominates(vx, vy) ? 1 : 0;
    switch (lorpath::lex_compare(lorpath::lorenz_vector(vx), lorpath::lorenz_vector(vy))) {
      case lorpath::LexOrder::less: out->lex = -1; break;
      case lorpath::LexOrder::equal: out->lex = 0; break;
      case lorpath::LexOrder::greater: out->lex = 1; break;
    }
    out->sum_bound = lorpath::sum_bound_dominates(vx, vy) ? 1 : 0;
  });
}

const char* lorpath_report_json(const lorpath_report* report) {
  return report ? report->json.c_str() : "";
}

void lorpath_report_free(lorpath_report* report) { delete report; }

void lorpath_string_free(char* text) { std::free(text); }

}  // extern "C"
