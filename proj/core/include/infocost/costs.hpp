#pragma once

#include <span>
#include <vector>

#include "infocost/beta_matrix.hpp"
#include "infocost/experiment.hpp"

namespace infocost {

/// Log-likelihood-ratio cost sum_{i != j} beta_ij D_KL(mu_i || mu_j).
/// Throws StateSpaceMismatch.
double llr_cost(const Experiment& mu, const BetaMatrix& beta);

/// One term of the LLR cost, for reporting.
struct PairTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  double beta = 0.0;
  double kl = 0.0;
  double term = 0.0;  // beta * kl
};

/// All ordered pairs i != j in row-major order.
std::vector<PairTerm> llr_cost_terms(const Experiment& mu, const BetaMatrix& beta);

/// Closed form for the symmetric binary signal with accuracy p:
/// (beta_01 + beta_10) [p ln(p/(1-p)) + (1-p) ln((1-p)/p)]. Throws POutOfRange.
double binary_cost(double p, const BetaMatrix& beta);

/// Normal signals N(m_i, sigma^2): sum beta_ij (m_j - m_i)^2 / (2 sigma^2).
/// Throws SigmaNonPositive or DimensionMismatch.
double normal_cost(std::span<const double> means, double sigma, const BetaMatrix& beta);

/// lambda times the expected reduction of Shannon entropy (nats) from the
/// prior to the posterior. Throws PriorNotFullSupport.
double mutual_information_cost(const Experiment& mu, std::span<const double> prior,
                               double lambda = 1.0);

/// Potential F(p) = sum_{i,j} beta_ij (p_i / q_i) ln(p_i / p_j) whose expected
/// increase from prior q to posterior p equals the LLR cost.
/// Throws NotFullSupport.
double posterior_separable_value(const BetaMatrix& beta, std::span<const double> prior,
                                 std::span<const double> p);

/// sum_s P(s) F(posterior(s)) - F(prior).
double llr_cost_via_posteriors(const Experiment& mu, const BetaMatrix& beta,
                               std::span<const double> prior);

/// Costs of the two swan experiments with beta_ae = kappa, beta_ea = 0.
/// Experiment I can only falsify "all swans are white"; II can only verify it.
struct AsymmetryCosts {
  double cost_falsify = 0.0;  // experiment I
  double cost_verify = 0.0;   // experiment II
};

/// Throws EpsilonOutOfRange unless 1e-6 < epsilon < 0.5, so that the
/// epsilon^2 error entries stay above the positivity floor.
AsymmetryCosts verification_asymmetry(double epsilon, double kappa);

/// The swan experiment I (falsification) and II (verification).
Experiment falsification_experiment(double epsilon);
Experiment verification_experiment(double epsilon);

/// Costs of observing k independent flips of a coin whose bias is p or 1-p
/// with equal prior probability. Evaluated on the number of heads, which
/// is a sufficient statistic for the k-fold product.
double coin_flip_mutual_information(double p, int k, double lambda = 1.0);
double coin_flip_llr_cost(double p, int k, const BetaMatrix& beta);

}  // namespace infocost
