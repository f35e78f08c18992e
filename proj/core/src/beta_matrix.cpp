#include "infocost/beta_matrix.hpp"

#include <cmath>

#include "infocost/error.hpp"

namespace infocost {

namespace {

BetaMatrix inverse_square(const StateSpace& states, double scale, double kappa) {
  if (!states.has_values())
    fail(ErrorCode::MissingValues, "one-dimensional coefficients need state values");
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    fail(ErrorCode::InvalidArgument, "kappa must be positive");
  const auto& v = *states.values();
  const auto n = static_cast<Eigen::Index>(states.size());
  Matrix coef = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) {
        const double d = v[i] - v[j];
        coef(i, j) = kappa / (scale * d * d);
      }
  return BetaMatrix(states, std::move(coef));
}

}  // namespace

BetaMatrix::BetaMatrix(StateSpace states, Matrix coef, Unchecked)
    : states_(std::move(states)), coef_(std::move(coef)) {
  if (static_cast<std::size_t>(coef_.rows()) != states_.size() ||
      static_cast<std::size_t>(coef_.cols()) != states_.size())
    fail(ErrorCode::DimensionMismatch, "beta matrix must be |states| x |states|");
}

BetaMatrix::BetaMatrix(StateSpace states, Matrix coef)
    : BetaMatrix(std::move(states), std::move(coef), Unchecked{}) {
  for (Eigen::Index i = 0; i < coef_.rows(); ++i)
    for (Eigen::Index j = 0; j < coef_.cols(); ++j) {
      if (i == j) continue;
      const double b = coef_(i, j);
      if (!std::isfinite(b)) fail(ErrorCode::InvalidArgument, "beta entries must be finite");
      if (b < 0.0)
        fail(ErrorCode::NegativeBeta, "beta(" + std::to_string(i) + "," + std::to_string(j) +
                                          ") is negative");
    }
}

BetaMatrix BetaMatrix::constant(StateSpace states, double value) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Matrix coef = Matrix::Constant(n, n, value);
  coef.diagonal().setZero();
  return BetaMatrix(std::move(states), std::move(coef));
}

BetaMatrix BetaMatrix::unvalidated(StateSpace states, Matrix coef) {
  return BetaMatrix(std::move(states), std::move(coef), Unchecked{});
}

bool BetaMatrix::strictly_positive() const {
  for (Eigen::Index i = 0; i < coef_.rows(); ++i)
    for (Eigen::Index j = 0; j < coef_.cols(); ++j)
      if (i != j && !(coef_(i, j) > 0.0)) return false;
  return true;
}

BetaMatrix one_dimensional_betas(const StateSpace& states, double kappa) {
  const double n = static_cast<double>(states.size());
  return inverse_square(states, n * (n - 1.0), kappa);
}

BetaMatrix inverse_square_betas(const StateSpace& states, double kappa) {
  return inverse_square(states, 1.0, kappa);
}

}  // namespace infocost
