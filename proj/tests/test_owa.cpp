#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "lorpath/owa.hpp"

using namespace lorpath;

namespace {

OwaWeights example_weights() {
  return OwaWeights::from_phi({Rational::parse("0.9"), Rational::parse("1.0")});
}

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

std::vector<OwaWeights> weight_sets(int m) {
  std::vector<Rational> linear, dyadic, harmonic;
  for (int i = 1; i <= m; ++i) {
    linear.emplace_back(m - i + 1);
    dyadic.emplace_back(std::int64_t(1) << (m - i));
    harmonic.emplace_back(1, i);
  }
  return {OwaWeights::from_weights(linear), OwaWeights::from_weights(dyadic),
          OwaWeights::from_weights(harmonic)};
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(Rational::parse("0.9") == Rational(9, 10));
  CHECK(Rational::parse("1.0") == Rational(1));
  CHECK(Rational::parse("-3.25") == Rational(-13, 4));
  CHECK(Rational::parse("9/10") == Rational(9, 10));
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1..2"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);

  CHECK(Rational(97, 10).decimal_or_fraction() == "9.7");
  CHECK(Rational(1, 4).decimal_or_fraction() == "0.25");
  CHECK(Rational(1, 3).decimal_or_fraction() == "1/3");
  CHECK(Rational(-1, 2).decimal_or_fraction() == "-0.5");
  CHECK(Rational(9).decimal_or_fraction() == "9");
  CHECK(Rational(2, 4).to_string() == "1/2");
}

TEST_CASE("weight validation") {
  const OwaWeights w = example_weights();
  CHECK(w.weights() == std::vector<Rational>{Rational(9, 10), Rational(1, 10)});
  CHECK(w.lorenz_coefficients() == std::vector<Rational>{Rational(4, 5), Rational(1, 10)});

  // Equal weights, non-decreasing phi increments, non-positive weights: all rejected.
  CHECK_THROWS_AS(OwaWeights::from_phi({Rational(1), Rational(2)}), WeightError);
  CHECK_THROWS_AS(OwaWeights::from_phi({Rational(1, 2), Rational(1)}), WeightError);
  CHECK_THROWS_AS(OwaWeights::from_weights({Rational(1, 2), Rational(1, 2)}), WeightError);
  CHECK_THROWS_AS(OwaWeights::from_weights({Rational(1), Rational(0)}), WeightError);
  CHECK_THROWS_AS(OwaWeights::from_weights({Rational(0)}), WeightError);
  CHECK_THROWS_AS(OwaWeights::from_phi({}), WeightError);

  CHECK_NOTHROW(OwaWeights::from_phi({Rational(3)}));  // m = 1
  const std::string message = [] {
    try {
      OwaWeights::from_weights({Rational(1, 2), Rational(1, 2)});
    } catch (const WeightError& e) {
      return std::string(e.what());
    }
    return std::string();
  }();
  CHECK(message.find("w[1]") != std::string::npos);
  CHECK(message.find("w[2]") != std::string::npos);
}

TEST_CASE("phi over Lorenz vectors") {
  const OwaWeights w = example_weights();
  CHECK(phi_of_lorenz(LorenzVector{{9, 18}}, w) == Rational(9));
  CHECK(phi_of_lorenz(LorenzVector{{0, 0}}, w) == Rational(0));
  CHECK(phi_of_lorenz(LorenzVector{{10, 17}}, w) == Rational(97, 10));
  CHECK_THROWS_AS(phi_of_lorenz(LorenzVector{{1, 2, 3}}, w), ArgumentError);
}

TEST_CASE("ordered weighted average") {
  const OwaWeights w = example_weights();
  CHECK(owa_value({9, 9}, w) == Rational(9));
  CHECK(owa_value({10, 7}, w) == Rational(97, 10));
  CHECK(owa_value({5, 11}, w) == Rational(52, 5));  // 10.4
  // Constant acts evaluate to k when phi is normalized to 1.
  CHECK(owa_value({4, 4}, w) == Rational(4));
  CHECK_THROWS_AS(owa_value({1}, w), ArgumentError);
}

TEST_CASE("owa equals phi composed with the Lorenz map") {
  for (int m = 1; m <= 3; ++m) {
    const auto sets = weight_sets(m);
    for (const auto& x : all_vectors(m, 5)) {
      const LorenzVector l = lorenz_vector(x);
      for (const auto& w : sets) CHECK(owa_value(x, w) == phi_of_lorenz(l, w));
    }
  }
}

TEST_CASE("owa is symmetric and strictly Lorenz-monotone") {
  const auto vectors = all_vectors(3, 4);
  const auto sets = weight_sets(3);
  for (const auto& x : vectors) {
    CostVector swapped = {x[2], x[0], x[1]};
    for (const auto& w : sets) CHECK(owa_value(x, w) == owa_value(swapped, w));
  }
  std::mt19937 rng(5);
  for (int round = 0; round < 2000; ++round) {
    const auto& x = vectors[rng() % vectors.size()];
    const auto& y = vectors[rng() % vectors.size()];
    if (!lorenz_strictly_dominates(x, y)) continue;
    for (const auto& w : sets) CHECK(owa_value(x, w) < owa_value(y, w));
  }
}

TEST_CASE("an owa-minimal element is never strictly Lorenz-dominated") {
  std::mt19937 rng(23);
  const auto sets = weight_sets(3);
  for (int round = 0; round < 200; ++round) {
    std::vector<CostVector> pool;
    const std::size_t count = 2 + rng() % 10;
    for (std::size_t i = 0; i < count; ++i) {
      pool.push_back({Cost(rng() % 8), Cost(rng() % 8), Cost(rng() % 8)});
    }
    for (const auto& w : sets) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < pool.size(); ++i) {
        if (owa_value(pool[i], w) < owa_value(pool[best], w)) best = i;
      }
      for (const auto& other : pool) {
        CHECK_FALSE(lorenz_strictly_dominates(other, pool[best]));
      }
    }
  }
}

TEST_CASE("Lorenz map is linear on comonotonic mixes") {
  std::mt19937 rng(7);
  const std::vector<Rational> alphas = {Rational(1, 2), Rational(1, 3), Rational(3, 4)};
  const auto sets = weight_sets(3);
  for (int round = 0; round < 300; ++round) {
    // Sort two random vectors with one shared permutation: comonotonic pair.
    CostVector x = {Cost(rng() % 9), Cost(rng() % 9), Cost(rng() % 9)};
    CostVector y = {Cost(rng() % 9), Cost(rng() % 9), Cost(rng() % 9)};
    std::sort(x.begin(), x.end(), std::greater<Cost>());
    std::sort(y.begin(), y.end(), std::greater<Cost>());
    std::vector<std::size_t> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    CostVector px(3), py(3);
    for (std::size_t i = 0; i < 3; ++i) {
      px[perm[i]] = x[i];
      py[perm[i]] = y[i];
    }

    const LorenzVector lx = lorenz_vector(px);
    const LorenzVector ly = lorenz_vector(py);
    for (const Rational& alpha : alphas) {
      const Rational beta = Rational(1) - alpha;
      // Lorenz of the mix, computed over exact rationals.
      std::vector<Rational> mix(3);
      for (std::size_t i = 0; i < 3; ++i) {
        mix[i] = alpha * Rational(px[i]) + beta * Rational(py[i]);
      }
      std::sort(mix.begin(), mix.end(), [](const Rational& a, const Rational& b) { return a > b; });
      for (std::size_t i = 1; i < 3; ++i) mix[i] += mix[i - 1];
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(mix[i] == alpha * Rational(lx.cum[i]) + beta * Rational(ly.cum[i]));
      }
      // Hence the criterion itself mixes linearly.
      for (const auto& w : sets) {
        Rational direct(0);
        for (std::size_t i = 0; i < 3; ++i) direct += w.lorenz_coefficients()[i] * mix[i];
        CHECK(direct == alpha * phi_of_lorenz(lx, w) + beta * phi_of_lorenz(ly, w));
      }
    }
  }
}
