#pragma once

#include "infocost/state_space.hpp"
#include "infocost/types.hpp"

namespace infocost {

/// Coefficients beta_ij >= 0 of the log-likelihood-ratio cost: the marginal
/// cost of raising the expected log-likelihood ratio of state i against j.
/// Diagonal entries are ignored.
class BetaMatrix {
 public:
  /// Throws DimensionMismatch or NegativeBeta.
  BetaMatrix(StateSpace states, Matrix coef);

  /// beta_ij = value for every i != j.
  static BetaMatrix constant(StateSpace states, double value);

  /// Skips the non-negativity check. Only the property-check test hook uses
  /// this, to demonstrate that a corrupted matrix is caught.
  static BetaMatrix unvalidated(StateSpace states, Matrix coef);

  const StateSpace& states() const noexcept { return states_; }
  const Matrix& coef() const noexcept { return coef_; }
  std::size_t size() const noexcept { return states_.size(); }
  double operator()(std::size_t i, std::size_t j) const {
    return coef_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// True iff every off-diagonal coefficient is strictly positive.
  bool strictly_positive() const;

 private:
  struct Unchecked {};
  BetaMatrix(StateSpace states, Matrix coef, Unchecked);

  StateSpace states_;
  Matrix coef_;
};

/// Normalized one-dimensional rule beta_ij = kappa / (n (n-1) (v_i - v_j)^2).
/// Throws MissingValues if the states carry no values, InvalidArgument for
/// kappa <= 0.
BetaMatrix one_dimensional_betas(const StateSpace& states, double kappa);

/// Unnormalized rule beta_ij = kappa / (v_i - v_j)^2 used for hypothesis
/// testing on integer grids and for the perception task.
BetaMatrix inverse_square_betas(const StateSpace& states, double kappa);

}  // namespace infocost
