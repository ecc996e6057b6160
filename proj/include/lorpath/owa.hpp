#pragma once

#include <vector>

#include "lorpath/dominance.hpp"
#include "lorpath/rational.hpp"

namespace lorpath {

/// Ordered weighting for m scenarios, given either as the cumulative values
/// phi_1..phi_m (with phi_0 = 0 and phi_{m+1} = phi_m) or as the weights
/// w_i = phi_i - phi_{i-1} directly. Valid iff w_1 > w_2 > ... > w_m > 0;
/// the derived Lorenz coefficients c_i = w_i - w_{i+1} (c_m = w_m) are then
/// all positive. No normalization is enforced.
class OwaWeights {
 public:
  static OwaWeights from_phi(std::vector<Rational> phi);        // throws WeightError
  static OwaWeights from_weights(std::vector<Rational> weights);  // throws WeightError

  int dimension() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& phi() const { return phi_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<Rational>& lorenz_coefficients() const { return coeff_; }

 private:
  OwaWeights() = default;
  std::vector<Rational> phi_;
  std::vector<Rational> weights_;
  std::vector<Rational> coeff_;
};

/// Linear criterion over Lorenz vectors: sum_i c_i * L_i. Smaller is better.
Rational phi_of_lorenz(const LorenzVector& l, const OwaWeights& w);

/// Ordered weighted average: sum_i w_i * x_(i) with x sorted decreasing.
/// Equals phi_of_lorenz(lorenz_vector(x), w).
Rational owa_value(const CostVector& x, const OwaWeights& w);

}  // namespace lorpath
