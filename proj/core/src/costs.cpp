#include "infocost/costs.hpp"

#include <cmath>

#include "infocost/error.hpp"
#include "internal.hpp"

namespace infocost {

namespace {

void check_states(const Experiment& mu, const BetaMatrix& beta) {
  if (!(mu.states() == beta.states()))
    fail(ErrorCode::StateSpaceMismatch, "experiment and beta use different state spaces");
}

double binary_divergence(double p) {
  return p * std::log(p / (1.0 - p)) + (1.0 - p) * std::log((1.0 - p) / p);
}

void check_full_support(std::span<const double> p, std::size_t n, const char* what) {
  if (p.size() != n) fail(ErrorCode::DimensionMismatch, std::string(what) + " has wrong length");
  for (double v : p)
    if (!(v > 0.0) || !std::isfinite(v))
      fail(ErrorCode::NotFullSupport, std::string(what) + " must have full support");
}

double log_binomial(int k, int h) {
  return std::lgamma(k + 1.0) - std::lgamma(h + 1.0) - std::lgamma(k - h + 1.0);
}

}  // namespace

double llr_cost(const Experiment& mu, const BetaMatrix& beta) {
  check_states(mu, beta);
  const std::size_t n = mu.num_states();
  double cost = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && beta(i, j) != 0.0) cost += beta(i, j) * detail::kl_unchecked(mu.row(i), mu.row(j));
  return cost;
}

std::vector<PairTerm> llr_cost_terms(const Experiment& mu, const BetaMatrix& beta) {
  check_states(mu, beta);
  std::vector<PairTerm> terms;
  const std::size_t n = mu.num_states();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      PairTerm t{i, j, beta(i, j), detail::kl_unchecked(mu.row(i), mu.row(j)), 0.0};
      t.term = t.beta * t.kl;
      terms.push_back(t);
    }
  return terms;
}

double binary_cost(double p, const BetaMatrix& beta) {
  if (beta.size() != 2) fail(ErrorCode::DimensionMismatch, "binary cost needs two states");
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::POutOfRange, "p must lie in (0, 1)");
  return (beta(0, 1) + beta(1, 0)) * binary_divergence(p);
}

double normal_cost(std::span<const double> means, double sigma, const BetaMatrix& beta) {
  if (!(sigma > 0.0)) fail(ErrorCode::SigmaNonPositive, "sigma must be positive");
  if (means.size() != beta.size())
    fail(ErrorCode::DimensionMismatch, "one mean per state is required");
  const double denom = 2.0 * sigma * sigma;
  double cost = 0.0;
  for (std::size_t i = 0; i < means.size(); ++i)
    for (std::size_t j = 0; j < means.size(); ++j)
      if (i != j) {
        const double d = means[j] - means[i];
        cost += beta(i, j) * d * d / denom;
      }
  return cost;
}

double mutual_information_cost(const Experiment& mu, std::span<const double> prior, double lambda) {
  if (!(lambda > 0.0)) fail(ErrorCode::InvalidArgument, "lambda must be positive");
  const auto atoms = posterior_distribution(mu, prior);
  double expected_posterior_entropy = 0.0;
  for (const auto& a : atoms) expected_posterior_entropy += a.marginal * detail::entropy(a.posterior);
  return lambda * (detail::entropy(prior) - expected_posterior_entropy);
}

double posterior_separable_value(const BetaMatrix& beta, std::span<const double> prior,
                                 std::span<const double> p) {
  const std::size_t n = beta.size();
  check_full_support(prior, n, "prior");
  check_full_support(p, n, "posterior");
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && beta(i, j) != 0.0) value += beta(i, j) * (p[i] / prior[i]) * std::log(p[i] / p[j]);
  return value;
}

double llr_cost_via_posteriors(const Experiment& mu, const BetaMatrix& beta,
                               std::span<const double> prior) {
  check_states(mu, beta);
  const auto atoms = posterior_distribution(mu, prior);
  double expected = 0.0;
  for (const auto& a : atoms) expected += a.marginal * posterior_separable_value(beta, prior, a.posterior);
  return expected - posterior_separable_value(beta, prior, prior);
}

namespace {

// The error probability epsilon^2 must clear the positivity floor.
void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5) || !(epsilon * epsilon > kPositivityFloor))
    fail(ErrorCode::EpsilonOutOfRange, "epsilon must lie in (1e-6, 0.5)");
}

}  // namespace

Experiment falsification_experiment(double epsilon) {
  check_epsilon(epsilon);
  const double e2 = epsilon * epsilon;
  return make_experiment(StateSpace({"a", "e"}), {"s1", "s2"},
                         matrix_from_rows({{1.0 - e2, e2}, {1.0 - epsilon, epsilon}}));
}

Experiment verification_experiment(double epsilon) {
  check_epsilon(epsilon);
  const double e2 = epsilon * epsilon;
  return make_experiment(StateSpace({"a", "e"}), {"s1", "s2"},
                         matrix_from_rows({{1.0 - epsilon, epsilon}, {1.0 - e2, e2}}));
}

AsymmetryCosts verification_asymmetry(double epsilon, double kappa) {
  const Experiment falsify = falsification_experiment(epsilon);
  const Experiment verify = verification_experiment(epsilon);
  Matrix coef = Matrix::Zero(2, 2);
  coef(0, 1) = kappa;
  const BetaMatrix beta(falsify.states(), std::move(coef));
  return {llr_cost(falsify, beta), llr_cost(verify, beta)};
}

double coin_flip_mutual_information(double p, int k, double lambda) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::POutOfRange, "p must lie in (0, 1)");
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be positive");
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  double expected_entropy = 0.0;
  for (int h = 0; h <= k; ++h) {
    const double log_c = log_binomial(k, h);
    const double log_p0 = log_c + h * lp + (k - h) * lq;
    const double log_p1 = log_c + h * lq + (k - h) * lp;
    const double marginal = 0.5 * (std::exp(log_p0) + std::exp(log_p1));
    const double post0 = 1.0 / (1.0 + std::exp(log_p1 - log_p0));
    const double post[2] = {post0, 1.0 - post0};
    expected_entropy += marginal * detail::entropy(post);
  }
  return lambda * (std::log(2.0) - expected_entropy);
}

double coin_flip_llr_cost(double p, int k, const BetaMatrix& beta) {
  if (beta.size() != 2) fail(ErrorCode::DimensionMismatch, "coin flips have two states");
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::POutOfRange, "p must lie in (0, 1)");
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be positive");
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  double kl01 = 0.0;
  double kl10 = 0.0;
  for (int h = 0; h <= k; ++h) {
    const double log_c = log_binomial(k, h);
    const double log_p0 = log_c + h * lp + (k - h) * lq;
    const double log_p1 = log_c + h * lq + (k - h) * lp;
    kl01 += std::exp(log_p0) * (log_p0 - log_p1);
    kl10 += std::exp(log_p1) * (log_p1 - log_p0);
  }
  return beta(0, 1) * kl01 + beta(1, 0) * kl10;
}

}  // namespace infocost
