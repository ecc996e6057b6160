#include "lorpath/dominance.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lorpath {

namespace {

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) throw ArgumentError("vector length mismatch");
}

bool leq_all(const std::vector<Cost>& x, const std::vector<Cost>& y) {
  check_lengths(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

Relation relation_of(const std::vector<Cost>& x, const std::vector<Cost>& y) {
  const bool xy = leq_all(x, y);
  const bool yx = leq_all(y, x);
  if (xy && yx) return Relation::equivalent;
  if (xy) return Relation::strictly_dominates;
  if (yx) return Relation::strictly_dominated;
  return Relation::incomparable;
}

}  // namespace

LorenzVector lorenz_vector(const CostVector& x) {
  LorenzVector l;
  l.cum = x;
  std::sort(l.cum.begin(), l.cum.end(), std::greater<Cost>());
  for (std::size_t i = 1; i < l.cum.size(); ++i) l.cum[i] += l.cum[i - 1];
  return l;
}

bool weak_pareto_dominates(const CostVector& x, const CostVector& y) { return leq_all(x, y); }

bool weak_pareto_dominates(const LorenzVector& x, const LorenzVector& y) {
  return leq_all(x.cum, y.cum);
}

bool pareto_dominates(const CostVector& x, const CostVector& y) {
  return leq_all(x, y) && x != y;
}

bool lorenz_weakly_dominates(const CostVector& x, const CostVector& y) {
  return leq_all(lorenz_vector(x).cum, lorenz_vector(y).cum);
}

bool lorenz_strictly_dominates(const CostVector& x, const CostVector& y) {
  const LorenzVector lx = lorenz_vector(x);
  const LorenzVector ly = lorenz_vector(y);
  return leq_all(lx.cum, ly.cum) && lx.cum != ly.cum;
}

LexOrder lex_compare(const LorenzVector& a, const LorenzVector& b) {
  check_lengths(a.cum.size(), b.cum.size());
  for (std::size_t i = 0; i < a.cum.size(); ++i) {
    if (a.cum[i] < b.cum[i]) return LexOrder::less;
    if (a.cum[i] > b.cum[i]) return LexOrder::greater;
  }
  return LexOrder::equal;
}

Relation pareto_relation(const CostVector& x, const CostVector& y) { return relation_of(x, y); }

Relation lorenz_relation(const CostVector& x, const CostVector& y) {
  return relation_of(lorenz_vector(x).cum, lorenz_vector(y).cum);
}

CostVector pigou_dalton_transfer(const CostVector& x, std::size_t i, std::size_t j, Cost eps) {
  if (i >= x.size() || j >= x.size() || i == j) throw ArgumentError("transfer indices out of range");
  if (x[i] <= x[j]) throw ArgumentError("inadmissible transfer: x[i] <= x[j]");
  if (eps < 0 || eps > x[i] - x[j]) throw ArgumentError("inadmissible transfer: eps out of range");
  CostVector out = x;
  out[i] -= eps;
  out[j] += eps;
  return out;
}

bool sum_bound_dominates(const CostVector& x, const CostVector& y) {
  check_lengths(x.size(), y.size());
  return sum_of(y) > static_cast<Cost>(x.size()) * max_of(x);
}

std::vector<std::size_t> pareto_filter_indices(const std::vector<CostVector>& xs) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < xs.size() && !drop; ++j) {
      if (j == i) continue;
      drop = pareto_dominates(xs[j], xs[i]) || (xs[j] == xs[i] && j < i);
    }
    if (!drop) kept.push_back(i);
  }
  return kept;
}

std::vector<CostVector> pareto_filter(const std::vector<CostVector>& xs) {
  std::vector<CostVector> out;
  for (std::size_t i : pareto_filter_indices(xs)) out.push_back(xs[i]);
  return out;
}

std::vector<LorenzClass> lorenz_frontier(const std::vector<CostVector>& xs) {
  struct Members {
    std::size_t representative;
    std::set<CostVector> costs;
  };
  std::map<std::vector<Cost>, Members> classes;  // keyed by Lorenz cum, hence lex-sorted
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const LorenzVector l = lorenz_vector(xs[i]);
    auto [it, inserted] = classes.try_emplace(l.cum, Members{i, {}});
    it->second.costs.insert(xs[i]);
  }
  std::vector<LorenzClass> out;
  for (const auto& [cum, members] : classes) {
    bool dominated = false;
    for (const auto& [other, _] : classes) {
      if (other != cum && leq_all(other, cum)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      out.push_back({LorenzVector{cum}, members.representative, members.costs.size()});
    }
  }
  return out;
}

std::vector<CostVector> lorenz_filter(const std::vector<CostVector>& xs) {
  std::vector<std::size_t> reps;
  for (const auto& cls : lorenz_frontier(xs)) reps.push_back(cls.representative);
  std::sort(reps.begin(), reps.end());
  std::vector<CostVector> out;
  for (std::size_t i : reps) out.push_back(xs[i]);
  return out;
}

}  // namespace lorpath
