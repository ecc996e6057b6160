#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "lorpath/dominance.hpp"

using namespace lorpath;

namespace {

// Every vector of the given length with components in [0, max_comp].
std::vector<CostVector> all_vectors(int m, Cost max_comp) {
  std::vector<CostVector> out{CostVector(static_cast<std::size_t>(m), 0)};
  std::vector<CostVector> next;
  for (int pos = 0; pos < m; ++pos) {
    next.clear();
    for (const auto& v : out) {
      for (Cost c = 0; c <= max_comp; ++c) {
        CostVector w = v;
        w[static_cast<std::size_t>(pos)] = c;
        next.push_back(std::move(w));
      }
    }
    out.swap(next);
  }
  return out;
}

const std::vector<CostVector> kTable1 = {{9, 9},  {12, 6}, {10, 7}, {10, 11}, {8, 12}, {9, 11},
                                         {13, 5}, {11, 6}, {6, 11}, {4, 12},  {5, 11}};

}  // namespace

TEST_CASE("weak and strict Pareto dominance") {
  CHECK(weak_pareto_dominates({5, 3}, {10, 4}));
  CHECK(weak_pareto_dominates({7, 7}, {7, 7}));
  CHECK_FALSE(weak_pareto_dominates({13, 5}, {11, 6}));
  CHECK_FALSE(weak_pareto_dominates({11, 6}, {13, 5}));

  CHECK(pareto_dominates({11, 6}, {12, 6}));
  CHECK_FALSE(pareto_dominates({7, 7}, {7, 7}));
  CHECK_FALSE(pareto_dominates({9, 9}, {10, 7}));
  CHECK_FALSE(pareto_dominates({10, 7}, {9, 9}));

  CHECK_THROWS_AS(weak_pareto_dominates({1, 2}, {1, 2, 3}), ArgumentError);
}

TEST_CASE("Lorenz vectors") {
  CHECK(lorenz_vector({9, 9}).cum == std::vector<Cost>{9, 18});
  CHECK(lorenz_vector({5, 11}).cum == std::vector<Cost>{11, 16});
  CHECK(lorenz_vector({0, 0, 0}).cum == std::vector<Cost>{0, 0, 0});
  CHECK(lorenz_vector({3, 1, 2}).cum == std::vector<Cost>{3, 5, 6});
}

TEST_CASE("Lorenz dominance") {
  CHECK(lorenz_weakly_dominates({11, 6}, {13, 5}));
  CHECK(lorenz_strictly_dominates({11, 6}, {13, 5}));
  CHECK(lorenz_strictly_dominates({24, 24}, {25, 23}));
  CHECK(lorenz_weakly_dominates({12, 6}, {13, 5}));  // one-unit transfer
  CHECK(lorenz_weakly_dominates({7, 7}, {7, 7}));
  CHECK_FALSE(lorenz_strictly_dominates({7, 7}, {7, 7}));
}

TEST_CASE("lexicographic order on Lorenz vectors") {
  const LorenzVector a{{9, 18}};
  const LorenzVector b{{10, 17}};
  const LorenzVector c{{11, 16}};
  CHECK(lex_compare(a, b) == LexOrder::less);
  CHECK(lex_compare(b, c) == LexOrder::less);
  CHECK(lex_compare(c, b) == LexOrder::greater);
  CHECK(lex_compare(a, a) == LexOrder::equal);
}

TEST_CASE("verdicts mirror") {
  const auto mirror = [](Relation r) {
    if (r == Relation::strictly_dominates) return Relation::strictly_dominated;
    if (r == Relation::strictly_dominated) return Relation::strictly_dominates;
    return r;
  };
  for (const auto& x : all_vectors(2, 4)) {
    for (const auto& y : all_vectors(2, 4)) {
      CHECK(pareto_relation(y, x) == mirror(pareto_relation(x, y)));
      CHECK(lorenz_relation(y, x) == mirror(lorenz_relation(x, y)));
    }
  }
  CHECK(pareto_relation({1, 2}, {1, 2}) == Relation::equivalent);
  CHECK(lorenz_relation({1, 2}, {2, 1}) == Relation::equivalent);  // same Lorenz class
}

TEST_CASE("admissible transfers") {
  CHECK(pigou_dalton_transfer({13, 5}, 0, 1, 4) == CostVector{9, 9});
  CHECK(pigou_dalton_transfer({13, 5}, 0, 1, 0) == CostVector{13, 5});
  CHECK(pigou_dalton_transfer({13, 5}, 0, 1, 8) == CostVector{5, 13});
  CHECK_THROWS_AS(pigou_dalton_transfer({13, 5}, 0, 1, 9), ArgumentError);
  CHECK_THROWS_AS(pigou_dalton_transfer({5, 13}, 0, 1, 1), ArgumentError);  // x[i] <= x[j]
  CHECK_THROWS_AS(pigou_dalton_transfer({5, 13}, 0, 0, 0), ArgumentError);
}

TEST_CASE("sum bound") {
  CHECK(sum_bound_dominates({9, 9}, {13, 7}));        // 20 > 18
  CHECK_FALSE(sum_bound_dominates({9, 9}, {10, 8}));  // 18 > 18 fails; inconclusive
}

TEST_CASE("sum bound soundness, exhaustive") {
  for (int m = 1; m <= 4; ++m) {
    const auto vectors = all_vectors(m, 8);
    std::vector<LorenzVector> lorenz;
    std::vector<Cost> sums(vectors.size()), maxes(vectors.size());
    lorenz.reserve(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      lorenz.push_back(lorenz_vector(vectors[i]));
      sums[i] = sum_of(vectors[i]);
      maxes[i] = max_of(vectors[i]);
    }
    std::size_t triggered = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (sums[j] > Cost(m) * maxes[i]) {
          ++triggered;
          const bool strict = weak_pareto_dominates(lorenz[i], lorenz[j]) &&
                              lorenz[i].cum != lorenz[j].cum;
          if (!strict) {
            CAPTURE(vectors[i]);
            CAPTURE(vectors[j]);
            REQUIRE(strict);
          }
        }
      }
    }
    CHECK(triggered > 0);
  }
}

TEST_CASE("pareto filter") {
  const auto kept = pareto_filter(kTable1);
  const std::vector<CostVector> expected = {{9, 9}, {10, 7}, {13, 5}, {11, 6}, {4, 12}, {5, 11}};
  CHECK(kept == expected);

  CHECK(pareto_filter({{3, 4}}) == std::vector<CostVector>{{3, 4}});
  CHECK(pareto_filter({{2, 2}, {2, 2}, {1, 3}}) == std::vector<CostVector>{{2, 2}, {1, 3}});

  // Same-mean antichain: nothing is filtered.
  std::vector<CostVector> hansen3;
  for (Cost x = 0; x <= 7; ++x) hansen3.push_back({x, 7 - x});
  CHECK(pareto_filter(hansen3).size() == 8);
}

TEST_CASE("lorenz filter and classes") {
  const auto kept = lorenz_filter(kTable1);
  CHECK(kept == std::vector<CostVector>{{9, 9}, {10, 7}, {5, 11}});

  std::vector<CostVector> hansen3;
  for (Cost x = 0; x <= 7; ++x) hansen3.push_back({x, 7 - x});
  const auto classes = lorenz_frontier(hansen3);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].lorenz.cum == std::vector<Cost>{4, 7});
  CHECK(classes[0].distinct_costs == 2);  // (4,3) and (3,4)
  CHECK(classes[0].representative == 3);  // (3,4) comes first
  CHECK(lorenz_filter(hansen3) == std::vector<CostVector>{{3, 4}});

  std::vector<CostVector> anti3;
  for (Cost x = 0; x <= 7; ++x) anti3.push_back({2 * x, 24 - x});
  CHECK(lorenz_frontier(anti3).size() == 8);
}

TEST_CASE("lorenz filter is a refinement of pareto filter") {
  const auto vectors = all_vectors(3, 4);
  // Sliding windows as small input sets.
  for (std::size_t start = 0; start + 12 <= vectors.size(); start += 37) {
    const std::vector<CostVector> set(vectors.begin() + static_cast<std::ptrdiff_t>(start),
                                      vectors.begin() + static_cast<std::ptrdiff_t>(start + 12));
    const auto pareto = pareto_filter(set);
    for (const auto& kept : lorenz_filter(set)) {
      const bool lorenz_equal_present =
          std::any_of(pareto.begin(), pareto.end(), [&](const CostVector& p) {
            return lorenz_vector(p) == lorenz_vector(kept);
          });
      CHECK(lorenz_equal_present);
    }
    CHECK(lorenz_filter(set).size() <= pareto.size());
  }
}

TEST_CASE("dominance properties, quick sweep") {
  const auto vectors = all_vectors(2, 5);
  for (const auto& x : vectors) {
    // Symmetry under the swap permutation.
    CHECK(lorenz_vector({x[1], x[0]}) == lorenz_vector(x));
    for (const auto& y : vectors) {
      if (pareto_dominates(x, y)) CHECK(lorenz_strictly_dominates(x, y));
      if (lorenz_strictly_dominates(x, y)) {
        CHECK(lex_compare(lorenz_vector(x), lorenz_vector(y)) == LexOrder::less);
      }
    }
    // Transfers never hurt.
    if (x[0] > x[1]) {
      for (Cost eps = 0; eps <= x[0] - x[1]; ++eps) {
        CHECK(lorenz_weakly_dominates(pigou_dalton_transfer(x, 0, 1, eps), x));
      }
    }
  }
}
