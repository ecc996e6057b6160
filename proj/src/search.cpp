#include "lorpath/search.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace lorpath {

HeuristicKind heuristic_kind_from_name(std::string_view name) {
  if (name == "zero") return HeuristicKind::zero;
  if (name == "arc") return HeuristicKind::arc;
  if (name == "ideal") return HeuristicKind::ideal_point;
  throw ArgumentError("unknown heuristic '" + std::string(name) + "' (zero|arc|ideal)");
}

std::string_view heuristic_kind_name(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::zero: return "zero";
    case HeuristicKind::arc: return "arc";
    case HeuristicKind::ideal_point: return "ideal";
  }
  return "?";
}

namespace {

constexpr Cost kUnreachable = std::numeric_limits<Cost>::max();

// One backward scalar sweep per scenario, all goals at distance zero.
std::vector<std::vector<Cost>> goal_distances(const IndexedGraph& g) {
  const std::uint32_t n = g.node_count();
  std::vector<std::vector<std::uint32_t>> in_arcs(n);
  for (std::uint32_t a = 0; a < g.arc_count(); ++a) in_arcs[g.arc_to(a)].push_back(a);

  std::vector<std::vector<Cost>> dist(static_cast<std::size_t>(g.scenarios()),
                                      std::vector<Cost>(n, kUnreachable));
  for (int s = 0; s < g.scenarios(); ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    using Item = std::pair<Cost, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    for (std::uint32_t goal : g.goals()) {
      d[goal] = 0;
      queue.emplace(0, goal);
    }
    while (!queue.empty()) {
      const auto [cost, node] = queue.top();
      queue.pop();
      if (cost > d[node]) continue;
      for (std::uint32_t a : in_arcs[node]) {
        const std::uint32_t from = g.arc_from(a);
        const Cost next = cost + g.arc_cost(a)[static_cast<std::size_t>(s)];
        if (next < d[from]) {
          d[from] = next;
          queue.emplace(next, from);
        }
      }
    }
  }
  return dist;
}

}  // namespace

HeuristicTable build_heuristic(const IndexedGraph& g, HeuristicKind kind) {
  HeuristicTable table;
  table.kind = kind;
  const std::uint32_t n = g.node_count();
  table.sets.resize(n);
  table.reachable.assign(n, 1);
  const CostVector zero = zeros(static_cast<std::size_t>(g.scenarios()));

  switch (kind) {
    case HeuristicKind::zero:
      for (std::uint32_t v = 0; v < n; ++v) table.sets[v] = {zero};
      break;
    case HeuristicKind::arc:
      for (std::uint32_t v = 0; v < n; ++v) {
        if (g.is_goal(v) || g.out_arcs(v).empty()) {
          table.sets[v] = {zero};
          continue;
        }
        std::vector<CostVector> outgoing;
        for (std::uint32_t a : g.out_arcs(v)) outgoing.push_back(g.arc_cost(a));
        table.sets[v] = pareto_filter(outgoing);
      }
      break;
    case HeuristicKind::ideal_point: {
      const auto dist = goal_distances(g);
      for (std::uint32_t v = 0; v < n; ++v) {
        CostVector h(static_cast<std::size_t>(g.scenarios()));
        bool ok = true;
        for (int s = 0; s < g.scenarios(); ++s) {
          const Cost d = dist[static_cast<std::size_t>(s)][v];
          ok = ok && d != kUnreachable;
          h[static_cast<std::size_t>(s)] = ok ? d : 0;
        }
        if (ok) {
          table.sets[v] = {std::move(h)};
        } else {
          table.sets[v] = {zero};
          table.reachable[v] = 0;
        }
      }
      break;
    }
  }
  return table;
}

namespace {

struct LabelRec {
  std::uint32_t node = 0;
  std::int64_t pred = -1;
  std::int64_t via_arc = -1;
  CostVector g;
  LorenzVector f;           // Lorenz vector of the lex-best evaluation member
  std::uint32_t f_member = 0;  // index into H(node) attaining it
  Rational value;           // owa mode priority
  LabelStatus status = LabelStatus::open;
};

struct QueueEntry {
  LorenzVector f;
  Rational value;
  std::uint32_t node = 0;
  std::uint32_t id = 0;
};

struct LorenzAfter {
  // true when a pops after b (min-queue on lex f, then node input order, id)
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    const LexOrder o = lex_compare(a.f, b.f);
    if (o != LexOrder::equal) return o == LexOrder::greater;
    if (a.node != b.node) return a.node > b.node;
    return a.id > b.id;
  }
};

struct ValueAfter {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.value != b.value) return a.value > b.value;
    if (a.node != b.node) return a.node > b.node;
    return a.id > b.id;
  }
};

class Engine {
 public:
  Engine(const IndexedGraph& g, const HeuristicTable& h, SearchMode mode, bool trace,
         const SearchOptions& options, const OwaWeights* weights)
      : g_(g), h_(h), mode_(mode), trace_(trace), opts_(options), weights_(weights) {
    if (!g.searchable()) {
      throw GraphError("cyclic graph with zero-cost components is not searchable");
    }
    if (!opts_.rule2 && !g.is_dag()) {
      throw GraphError("rule 2 cannot be disabled on a cyclic graph");
    }
    store_.resize(g.node_count());
    result_.mode = mode;
  }

  SearchResult run() {
    if (h_.reachable[g_.source()]) {
      const std::uint32_t root = create_root();
      if (root != kNone) push(root);
      loop();
    }
    finish();
    return std::move(result_);
  }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  const IndexedGraph& g_;
  const HeuristicTable& h_;
  SearchMode mode_;
  bool trace_;
  SearchOptions opts_;
  const OwaWeights* weights_;

  std::vector<LabelRec> labels_;
  std::vector<std::vector<std::uint32_t>> store_;  // Pareto-minimal g sets per node
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, LorenzAfter> lex_queue_;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, ValueAfter> value_queue_;

  SearchResult result_;
  std::vector<std::uint32_t> pareto_candidates_;  // goal labels, pop order
  bool have_incumbent_ = false;
  Rational incumbent_value_;
  std::uint32_t incumbent_label_ = kNone;

  void evaluate(LabelRec& rec) const {
    const auto& members = h_.sets[rec.node];
    bool first = true;
    for (std::uint32_t i = 0; i < members.size(); ++i) {
      const CostVector v = add(rec.g, members[i]);
      const LorenzVector l = lorenz_vector(v);
      if (mode_ == SearchMode::owa) {
        const Rational value = phi_of_lorenz(l, *weights_);
        if (first || value < rec.value) {
          rec.value = value;
          rec.f = l;
          rec.f_member = i;
        }
      } else if (first || lex_compare(l, rec.f) == LexOrder::less) {
        rec.f = l;
        rec.f_member = i;
      }
      first = false;
    }
  }

  void push(std::uint32_t id) {
    const LabelRec& rec = labels_[id];
    if (mode_ == SearchMode::owa) {
      value_queue_.push({{}, rec.value, rec.node, id});
    } else {
      lex_queue_.push({rec.f, {}, rec.node, id});
    }
  }

  std::uint32_t create_root() {
    LabelRec root;
    root.node = g_.source();
    root.g = zeros(static_cast<std::size_t>(g_.scenarios()));
    evaluate(root);
    return admit(std::move(root));
  }

  // Adds the record to the arena, counts it, and runs the creation-time
  // pruning rules. Returns kNone when the label was pruned.
  std::uint32_t admit(LabelRec&& rec) {
    const std::uint32_t id = static_cast<std::uint32_t>(labels_.size());
    labels_.push_back(std::move(rec));
    ++result_.stats.labels_created;

    if (opts_.rule2 && !rule2_insert(id)) return kNone;
    if (mode_ == SearchMode::lorenz && opts_.rule1 && rule1_prune(id)) return kNone;
    if (mode_ == SearchMode::owa && have_incumbent_ && labels_[id].value >= incumbent_value_) {
      labels_[id].status = LabelStatus::pruned;
      ++result_.stats.pruned_rule1;
      record_prune(id, 1, lorenz_vector(labels_[incumbent_label_].g).cum);
      return kNone;
    }
    return id;
  }

  // Rule 2: refuse a label whose g is weakly dominated at its node, otherwise
  // insert it and retire stored labels it strictly dominates.
  bool rule2_insert(std::uint32_t id) {
    auto& stored = store_[labels_[id].node];
    for (std::uint32_t other : stored) {
      if (weak_pareto_dominates(labels_[other].g, labels_[id].g)) {
        labels_[id].status = LabelStatus::pruned;
        ++result_.stats.pruned_rule2;
        record_prune(id, 2, labels_[other].g);
        return false;
      }
    }
    std::erase_if(stored, [&](std::uint32_t other) {
      if (!pareto_dominates(labels_[id].g, labels_[other].g)) return false;
      if (labels_[other].status == LabelStatus::open) {
        labels_[other].status = LabelStatus::pruned;
        ++result_.stats.pruned_rule2;
        record_prune(other, 2, labels_[id].g);
      }
      return true;
    });
    stored.push_back(id);
    return true;
  }

  // Rule 1: a label dies only when every evaluation member is weakly
  // Lorenz-dominated by a detected solution. A dominated lex-best member
  // alone is not enough; a lex-worse member may still escape.
  bool rule1_prune(std::uint32_t id) {
    if (result_.solutions.empty()) return false;
    const LabelRec& rec = labels_[id];
    const auto& members = h_.sets[rec.node];
    // Solutions arrive lex-increasing, so the first one carries the smallest
    // leading Lorenz component; that is the bound of the fast test.
    const Cost best_first = result_.solutions.front().lorenz.cum.front();
    const Cost m = static_cast<Cost>(g_.scenarios());
    std::size_t f_covered_by = 0;
    for (std::uint32_t i = 0; i < members.size(); ++i) {
      const CostVector v = add(rec.g, members[i]);
      std::size_t covered_by = std::numeric_limits<std::size_t>::max();
      if (opts_.sum_bound_fast_path && sum_of(v) > m * best_first) {
        ++result_.stats.sum_bound_fast_hits;
        covered_by = 0;
      } else {
        const LorenzVector l = lorenz_vector(v);
        for (std::size_t s = 0; s < result_.solutions.size(); ++s) {
          if (weak_pareto_dominates(result_.solutions[s].lorenz, l)) {
            covered_by = s;
            break;
          }
        }
      }
      if (covered_by == std::numeric_limits<std::size_t>::max()) return false;
      if (i == rec.f_member) f_covered_by = covered_by;
    }
    labels_[id].status = LabelStatus::pruned;
    ++result_.stats.pruned_rule1;
    record_prune(id, 1, result_.solutions[f_covered_by].lorenz.cum);
    return true;
  }

  void record_prune(std::uint32_t id, int rule, std::vector<Cost> against) {
    if (!trace_) return;
    result_.prunes.push_back(
        {g_.node_name(labels_[id].node), labels_[id].g, rule, std::move(against)});
  }

  void expand(std::uint32_t id) {
    const std::uint32_t node = labels_[id].node;
    labels_[id].status = LabelStatus::expanded;
    ++result_.stats.labels_expanded;
    if (trace_) result_.trace.push_back({g_.node_name(node), labels_[id].g, labels_[id].f});

    if (g_.is_goal(node)) {
      if (mode_ == SearchMode::lorenz) record_solution(id);
      if (mode_ == SearchMode::pareto) pareto_candidates_.push_back(id);
      if (mode_ == SearchMode::owa) {
        have_incumbent_ = true;
        incumbent_value_ = labels_[id].value;
        incumbent_label_ = id;
        return;  // extensions cannot improve on the incumbent
      }
    }

    for (std::uint32_t a : g_.out_arcs(node)) {
      const std::uint32_t to = g_.arc_to(a);
      if (!h_.reachable[to]) continue;
      LabelRec child;
      child.node = to;
      child.pred = id;
      child.via_arc = static_cast<std::int64_t>(a);
      child.g = add(labels_[id].g, g_.arc_cost(a));
      evaluate(child);
      const std::uint32_t cid = admit(std::move(child));
      if (cid != kNone) push(cid);
    }
  }

  void loop() {
    if (mode_ == SearchMode::owa) {
      while (!value_queue_.empty()) {
        const std::uint32_t id = value_queue_.top().id;
        value_queue_.pop();
        if (labels_[id].status != LabelStatus::open) continue;
        if (have_incumbent_ && labels_[id].value >= incumbent_value_) {
          result_.next_open_value = labels_[id].value;
          break;
        }
        expand(id);
      }
      return;
    }
    while (!lex_queue_.empty()) {
      const std::uint32_t id = lex_queue_.top().id;
      lex_queue_.pop();
      if (labels_[id].status != LabelStatus::open) continue;
      // Dominance against detected solutions is re-checked at pop time; for
      // goal labels this implements the one-representative-per-class output
      // and therefore stays on even when rule 1 is disabled.
      if (mode_ == SearchMode::lorenz && (opts_.rule1 || g_.is_goal(labels_[id].node)) &&
          rule1_prune(id)) {
        continue;
      }
      expand(id);
    }
  }

  Solution solution_from(std::uint32_t id) const {
    std::vector<std::uint32_t> arcs;
    for (std::int64_t at = static_cast<std::int64_t>(id); labels_[at].pred >= 0;
         at = labels_[at].pred) {
      arcs.push_back(static_cast<std::uint32_t>(labels_[at].via_arc));
    }
    std::reverse(arcs.begin(), arcs.end());
    Solution s;
    const Path path = make_path(g_, std::move(arcs));
    s.nodes = path_nodes(g_, path);
    s.cost = labels_[id].g;
    s.lorenz = lorenz_vector(s.cost);
    return s;
  }

  void record_solution(std::uint32_t id) { result_.solutions.push_back(solution_from(id)); }

  void finish() {
    if (mode_ == SearchMode::pareto) {
      std::vector<CostVector> costs;
      for (std::uint32_t id : pareto_candidates_) costs.push_back(labels_[id].g);
      for (std::size_t i : pareto_filter_indices(costs)) {
        result_.solutions.push_back(solution_from(pareto_candidates_[i]));
      }
    }
    if (mode_ == SearchMode::owa && have_incumbent_) {
      Solution s = solution_from(incumbent_label_);
      s.owa = incumbent_value_;
      result_.owa_value = incumbent_value_;
      result_.solutions.push_back(std::move(s));
    }
    if (opts_.keep_labels) {
      for (std::uint32_t id = 0; id < labels_.size(); ++id) {
        const LabelRec& rec = labels_[id];
        result_.labels.push_back({id, g_.node_name(rec.node), rec.g, rec.f,
                                  rec.pred < 0 ? std::nullopt
                                               : std::optional<std::uint32_t>(
                                                     static_cast<std::uint32_t>(rec.pred)),
                                  rec.status});
      }
    }
  }
};

}  // namespace

SearchResult search_lorenz(const IndexedGraph& g, const HeuristicTable& h, bool trace,
                           const SearchOptions& options) {
  return Engine(g, h, SearchMode::lorenz, trace, options, nullptr).run();
}

SearchResult search_pareto(const IndexedGraph& g, const HeuristicTable& h, bool trace,
                           const SearchOptions& options) {
  return Engine(g, h, SearchMode::pareto, trace, options, nullptr).run();
}

SearchResult search_owa(const IndexedGraph& g, const OwaWeights& w, const HeuristicTable& h,
                        bool trace, const SearchOptions& options) {
  if (w.dimension() != g.scenarios()) {
    throw ArgumentError("weight dimension does not match scenario count");
  }
  return Engine(g, h, SearchMode::owa, trace, options, &w).run();
}

}  // namespace lorpath
