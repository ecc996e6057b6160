#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lorpath/model.hpp"
#include "lorpath/oracle.hpp"
#include "lorpath/owa.hpp"
#include "lorpath/search.hpp"

namespace lorpath::report {

// Run reports serialize with a stable key order; all numbers are integers or
// exact decimal strings (fraction form when non-terminating), never floats.
// Identical inputs produce identical bytes except the wall_time_ms field.

std::string trace_row(const TraceRow& row);  // "a\tg=[0,0]\tL(f)=[5,8]"

std::string render_search(const IndexedGraph& g, std::string_view mode, std::string_view heuristic,
                          const OwaWeights* weights, const SearchResult& result, bool include_trace,
                          std::int64_t wall_ms);

std::string render_validation(const ScenarioGraph& g, const ValidationReport& report);

std::string render_oracle_paths(const IndexedGraph& g, const std::vector<oracle::PathRecord>& paths,
                                std::uint64_t max_paths, std::int64_t wall_ms);

std::string render_oracle_frontier(const IndexedGraph& g, std::string_view mode,
                                   const std::vector<oracle::FrontierEntry>& entries,
                                   std::uint64_t max_paths, std::int64_t wall_ms);

std::string render_oracle_owa(const IndexedGraph& g, const OwaWeights& weights,
                              const oracle::OwaOptimum& optimum, std::uint64_t max_paths,
                              std::int64_t wall_ms);

std::string render_decide(const IndexedGraph& g, const CostVector& target,
                          const oracle::Decision& decision, std::uint64_t max_paths,
                          std::int64_t wall_ms, bool as_oracle);

struct CompareOutcome {
  bool agree = false;
  std::vector<LorenzVector> search_frontier;
  std::vector<LorenzVector> oracle_frontier;
  std::vector<LorenzVector> missing;  // oracle has, search lacks
  std::vector<LorenzVector> extra;    // search has, oracle lacks
  bool owa_mode = false;
  bool search_no_path = false;
  bool oracle_no_path = false;
  Rational search_value;
  Rational oracle_value;
};

std::string render_compare(const IndexedGraph& g, std::string_view mode, std::string_view heuristic,
                           const OwaWeights* weights, const CompareOutcome& outcome,
                           std::int64_t wall_ms);

}  // namespace lorpath::report
