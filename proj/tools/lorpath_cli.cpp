// Command-line front end; all computation goes through the C API in lorpath.h.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lorpath.h"

namespace {

struct GraphDeleter {
  void operator()(lorpath_graph* g) const { lorpath_graph_free(g); }
};
struct ReportDeleter {
  void operator()(lorpath_report* r) const { lorpath_report_free(r); }
};
using GraphPtr = std::unique_ptr<lorpath_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<lorpath_report, ReportDeleter>;

int fail(lorpath_status status) {
  std::fprintf(stderr, "error[%s]: %s\n", lorpath_status_name(status), lorpath_last_error());
  return static_cast<int>(status);
}

int fail_usage(const std::string& message) {
  std::fprintf(stderr, "error[argument]: %s\n", message.c_str());
  return 2;
}

// Writes to the -o file when given, else to stdout unless --quiet.
int emit(const std::string& text, const std::string& out_file, bool quiet) {
  if (!out_file.empty()) {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error[io]: cannot write '%s'\n", out_file.c_str());
      return 6;
    }
    out << text;
    return 0;
  }
  if (!quiet) std::fputs(text.c_str(), stdout);
  return 0;
}

std::vector<std::int64_t> parse_int_csv(const std::string& csv, bool& ok) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  ok = true;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) ok = false;
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (out.empty()) ok = false;
  return out;
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust path search over scenario-valued graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress stdout output");

  // generate
  auto* generate = app.add_subcommand("generate", "emit an instance as graph JSON");
  std::string family;
  generate->add_option("family", family, "figure1|hansen|antilorenz|partition|random")->required();
  int p = 1;
  generate->add_option("--p", p, "stage count for hansen/antilorenz");
  std::string sizes_csv;
  generate->add_option("--sizes", sizes_csv, "partition item sizes, e.g. 3,1,2");
  int nodes = 8;
  double density = 0.5;
  int m = 2;
  std::uint64_t seed = 0;
  int cost_min = 1, cost_max = 9;
  generate->add_option("--nodes", nodes, "random: node count");
  generate->add_option("--density", density, "random: arc density in (0,1]");
  generate->add_option("--m", m, "random: scenario count");
  generate->add_option("--seed", seed, "random: RNG seed");
  generate->add_option("--cost-min", cost_min, "random: minimum cost component");
  generate->add_option("--cost-max", cost_max, "random: maximum cost component");
  std::string gen_out;
  generate->add_option("-o,--out", gen_out, "output file");

  // search
  auto* search = app.add_subcommand("search", "run the label-expanding search");
  std::string graph_file, mode = "lorenz", heuristic = "arc", phi, weights;
  bool trace = false;
  search->add_option("--graph", graph_file, "graph JSON file")->required();
  search->add_option("--mode", mode, "lorenz|owa|pareto");
  search->add_option("--heuristic", heuristic, "zero|arc|ideal");
  search->add_option("--phi", phi, "cumulative weights, e.g. 0.9,1.0");
  search->add_option("--weights", weights, "ordered weights, e.g. 0.9,0.1");
  search->add_flag("--trace", trace, "include expanded-label trace and prune log");
  std::string search_out;
  search->add_option("-o,--out", search_out, "output file");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration baseline");
  std::string o_graph, o_mode = "lorenz", o_target, o_phi, o_weights;
  std::uint64_t o_max_paths = 0;
  oracle->add_option("--graph", o_graph, "graph JSON file")->required();
  oracle->add_option("--mode", o_mode, "paths|pareto|lorenz|owa|decide");
  oracle->add_option("--target", o_target, "decide: target vector, e.g. 3,3");
  oracle->add_option("--phi", o_phi, "owa: cumulative weights");
  oracle->add_option("--weights", o_weights, "owa: ordered weights");
  oracle->add_option("--max-paths", o_max_paths, "path cap (default 1000000)");
  std::string oracle_out;
  oracle->add_option("-o,--out", oracle_out, "output file");

  // compare
  auto* compare = app.add_subcommand("compare", "search vs oracle agreement");
  std::string c_graph, c_mode = "lorenz", c_heuristic = "arc", c_phi, c_weights;
  std::uint64_t c_max_paths = 0;
  compare->add_option("--graph", c_graph, "graph JSON file")->required();
  compare->add_option("--mode", c_mode, "lorenz|owa");
  compare->add_option("--heuristic", c_heuristic, "zero|arc|ideal");
  compare->add_option("--phi", c_phi, "owa: cumulative weights");
  compare->add_option("--weights", c_weights, "owa: ordered weights");
  compare->add_option("--max-paths", c_max_paths, "path cap (default 1000000)");
  std::string compare_out;
  compare->add_option("-o,--out", compare_out, "output file");

  // decide
  auto* decide = app.add_subcommand("decide", "is there a path Lorenz-dominating the target?");
  std::string d_graph, d_target, d_sizes;
  std::uint64_t d_max_paths = 0;
  decide->add_option("--graph", d_graph, "graph JSON file");
  decide->add_option("--sizes", d_sizes, "build a partition instance instead, e.g. 3,1,2");
  decide->add_option("--target", d_target, "target vector; defaults to graph metadata");
  decide->add_option("--max-paths", d_max_paths, "path cap (default 1000000)");
  std::string decide_out;
  decide->add_option("-o,--out", decide_out, "output file");

  // dominance
  auto* dominance = app.add_subcommand("dominance", "pairwise dominance verdicts");
  std::string x_csv, y_csv;
  dominance->add_option("--x", x_csv, "first cost vector, e.g. 13,5")->required();
  dominance->add_option("--y", y_csv, "second cost vector, e.g. 11,6")->required();
  std::string dominance_out;
  dominance->add_option("-o,--out", dominance_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (generate->parsed()) {
    GraphPtr g;
    lorpath_graph* raw = nullptr;
    lorpath_status st = LORPATH_OK;
    if (family == "figure1") {
      st = lorpath_generate_figure1(&raw);
    } else if (family == "hansen") {
      st = lorpath_generate_hansen(p, &raw);
    } else if (family == "antilorenz") {
      st = lorpath_generate_antilorenz(p, &raw);
    } else if (family == "partition") {
      bool ok = false;
      const auto sizes = parse_int_csv(sizes_csv, ok);
      if (!ok) return fail_usage("partition requires --sizes with positive integers");
      std::int64_t target[2] = {0, 0};
      st = lorpath_generate_partition(sizes.data(), sizes.size(), target, &raw);
    } else if (family == "random") {
      st = lorpath_generate_random(nodes, density, cost_min, cost_max, m, seed, &raw);
    } else {
      return fail_usage("unknown family '" + family + "'");
    }
    if (st != LORPATH_OK) return fail(st);
    g.reset(raw);
    char* text = nullptr;
    st = lorpath_graph_to_json(g.get(), &text);
    if (st != LORPATH_OK) return fail(st);
    const std::string json(text);
    lorpath_string_free(text);
    return emit(json, gen_out, quiet);
  }

  if (search->parsed()) {
    lorpath_graph* raw = nullptr;
    lorpath_status st = lorpath_graph_from_file(graph_file.c_str(), &raw);
    if (st != LORPATH_OK) return fail(st);
    GraphPtr g(raw);
    lorpath_report* rep = nullptr;
    st = lorpath_search(g.get(), mode.c_str(), heuristic.c_str(), opt(phi), opt(weights),
                        trace ? 1 : 0, &rep);
    if (st != LORPATH_OK) return fail(st);
    ReportPtr report(rep);
    return emit(lorpath_report_json(report.get()), search_out, quiet);
  }

  if (oracle->parsed()) {
    lorpath_graph* raw = nullptr;
    lorpath_status st = lorpath_graph_from_file(o_graph.c_str(), &raw);
    if (st != LORPATH_OK) return fail(st);
    GraphPtr g(raw);
    lorpath_report* rep = nullptr;
    st = lorpath_oracle(g.get(), o_mode.c_str(), opt(o_target), opt(o_phi), opt(o_weights),
                        o_max_paths, &rep);
    if (st != LORPATH_OK) return fail(st);
    ReportPtr report(rep);
    return emit(lorpath_report_json(report.get()), oracle_out, quiet);
  }

  if (compare->parsed()) {
    lorpath_graph* raw = nullptr;
    lorpath_status st = lorpath_graph_from_file(c_graph.c_str(), &raw);
    if (st != LORPATH_OK) return fail(st);
    GraphPtr g(raw);
    lorpath_report* rep = nullptr;
    int agree = 0;
    st = lorpath_compare(g.get(), c_mode.c_str(), c_heuristic.c_str(), opt(c_phi), opt(c_weights),
                         c_max_paths, &agree, &rep);
    if (st != LORPATH_OK) return fail(st);
    ReportPtr report(rep);
    const int io = emit(lorpath_report_json(report.get()), compare_out, quiet);
    if (io != 0) return io;
    return agree ? 0 : 1;
  }

  if (decide->parsed()) {
    GraphPtr g;
    lorpath_status st = LORPATH_OK;
    if (!d_sizes.empty()) {
      bool ok = false;
      const auto sizes = parse_int_csv(d_sizes, ok);
      if (!ok) return fail_usage("--sizes requires positive integers");
      lorpath_graph* raw = nullptr;
      std::int64_t target[2] = {0, 0};
      st = lorpath_generate_partition(sizes.data(), sizes.size(), target, &raw);
      if (st != LORPATH_OK) return fail(st);
      g.reset(raw);
    } else if (!d_graph.empty()) {
      lorpath_graph* raw = nullptr;
      st = lorpath_graph_from_file(d_graph.c_str(), &raw);
      if (st != LORPATH_OK) return fail(st);
      g.reset(raw);
    } else {
      return fail_usage("decide requires --graph or --sizes");
    }
    std::vector<std::int64_t> target;
    if (!d_target.empty()) {
      bool ok = false;
      target = parse_int_csv(d_target, ok);
      if (!ok) return fail_usage("--target requires integers");
    }
    lorpath_report* rep = nullptr;
    int exists = 0;
    st = lorpath_decide(g.get(), target.empty() ? nullptr : target.data(), target.size(),
                        d_max_paths, &exists, &rep);
    if (st != LORPATH_OK) return fail(st);
    ReportPtr report(rep);
    const int io = emit(lorpath_report_json(report.get()), decide_out, quiet);
    if (io != 0) return io;
    return exists ? 0 : 1;
  }

  if (dominance->parsed()) {
    bool ok_x = false, ok_y = false;
    const auto x = parse_int_csv(x_csv, ok_x);
    const auto y = parse_int_csv(y_csv, ok_y);
    if (!ok_x || !ok_y) return fail_usage("--x/--y require integer vectors like 13,5");
    lorpath_dominance_result verdict{};
    const lorpath_status st = lorpath_dominance(x.data(), x.size(), y.data(), y.size(), &verdict);
    if (st != LORPATH_OK) return fail(st);
    const auto yes_no = [](int v) { return v ? "true" : "false"; };
    std::ostringstream text;
    text << "weak_pareto: " << yes_no(verdict.weak_pareto) << "\n"
         << "pareto: " << yes_no(verdict.pareto) << "\n"
         << "weak_lorenz: " << yes_no(verdict.weak_lorenz) << "\n"
         << "strict_lorenz: " << yes_no(verdict.strict_lorenz) << "\n"
         << "lex: " << (verdict.lex < 0 ? "less" : verdict.lex > 0 ? "greater" : "equal") << "\n"
         << "sum_bound: " << yes_no(verdict.sum_bound) << "\n";
    return emit(text.str(), dominance_out, quiet);
  }

  return 2;
}
