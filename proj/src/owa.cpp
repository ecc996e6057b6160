#include "lorpath/owa.hpp"

#include <algorithm>

namespace lorpath {

namespace {

std::string describe(const Rational& r) { return r.decimal_or_fraction(); }

void check_monotone(const std::vector<Rational>& w) {
  const std::size_t m = w.size();
  if (m == 0) throw WeightError("at least one weight is required");
  if (!(w[m - 1] > Rational(0))) {
    throw WeightError("positivity violated: w[" + std::to_string(m) + "] = " + describe(w[m - 1]) +
                      " <= 0");
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (!(w[i] > w[i + 1])) {
      throw WeightError("strict decrease violated: w[" + std::to_string(i + 1) + "] = " +
                        describe(w[i]) + " <= w[" + std::to_string(i + 2) + "] = " +
                        describe(w[i + 1]));
    }
  }
}

}  // namespace

OwaWeights OwaWeights::from_phi(std::vector<Rational> phi) {
  OwaWeights w;
  w.phi_ = std::move(phi);
  if (w.phi_.empty()) throw WeightError("at least one phi value is required");
  w.weights_.reserve(w.phi_.size());
  Rational prev(0);
  for (const Rational& p : w.phi_) {
    w.weights_.push_back(p - prev);
    prev = p;
  }
  check_monotone(w.weights_);
  w.coeff_.resize(w.weights_.size());
  for (std::size_t i = 0; i + 1 < w.weights_.size(); ++i) {
    w.coeff_[i] = w.weights_[i] - w.weights_[i + 1];
  }
  w.coeff_.back() = w.weights_.back();
  return w;
}

OwaWeights OwaWeights::from_weights(std::vector<Rational> weights) {
  std::vector<Rational> phi;
  phi.reserve(weights.size());
  Rational acc(0);
  for (const Rational& wi : weights) {
    acc += wi;
    phi.push_back(acc);
  }
  return from_phi(std::move(phi));
}

Rational phi_of_lorenz(const LorenzVector& l, const OwaWeights& w) {
  if (static_cast<int>(l.cum.size()) != w.dimension()) {
    throw ArgumentError("Lorenz vector dimension does not match weights");
  }
  Rational total(0);
  for (std::size_t i = 0; i < l.cum.size(); ++i) {
    total += w.lorenz_coefficients()[i] * Rational(l.cum[i]);
  }
  return total;
}

Rational owa_value(const CostVector& x, const OwaWeights& w) {
  if (static_cast<int>(x.size()) != w.dimension()) {
    throw ArgumentError("cost vector dimension does not match weights");
  }
  CostVector sorted = x;
  std::sort(sorted.begin(), sorted.end(), std::greater<Cost>());
  Rational total(0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    total += w.weights()[i] * Rational(sorted[i]);
  }
  return total;
}

}  // namespace lorpath
