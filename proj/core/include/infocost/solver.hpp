#pragma once

#include <string>
#include <vector>

#include "infocost/beta_matrix.hpp"
#include "infocost/decision_problem.hpp"

namespace infocost {

struct SolveOptions {
  double tolerance = 1e-8;  // on the first-order-condition residual
  int max_iterations = 200000;
};

struct SolveResult {
  ChoiceRule rule;
  double objective = 0.0;  // expected_utility - cost
  double cost = 0.0;
  double expected_utility = 0.0;
  double foc_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<bool> support;          // actions kept in the support
  std::vector<std::string> warnings;  // e.g. non-strict concavity
};

/// Columns whose largest entry is at or below this value are out of support.
inline constexpr double kSupportThreshold = 1e-10;

double expected_utility(const DecisionProblem& problem, const ChoiceRule& rule);

/// LLR cost of a choice rule viewed as an experiment with signals = actions,
/// restricted to actions played in some state. Returns +inf when an action
/// is played in state i but never in state j with beta_ij > 0.
double choice_rule_cost(const ChoiceRule& rule, const BetaMatrix& beta);

/// expected_utility - choice_rule_cost. Throws DimensionMismatch.
double objective(const DecisionProblem& problem, const ChoiceRule& rule, const BetaMatrix& beta);

/// Largest violation of the first-order conditions
///   q_i [u(a1,i) - u(a2,i)] = c(i,a1) - c(i,a2),
///   c(i,a) = sum_{j != i} beta_ij ln(mu_i(a)/mu_j(a)) - beta_ji mu_j(a)/mu_i(a),
/// over states i and action pairs in the support. Throws
/// ZeroProbabilityOnSupport if a supported action has a zero entry.
double foc_residual(const DecisionProblem& problem, const BetaMatrix& beta, const ChoiceRule& rule);

/// Maximizes expected utility minus the LLR cost over choice rules.
///
/// Iterates from the utility-tilted point mu_i(a) ~ exp(u(a,i)/(1+||u||)).
/// Each iteration takes a Newton step on the KKT system of the row-sum
/// constraints; when that step is not an ascent direction it falls back to a
/// multiplicative-weights (mirror ascent) update of every state row. Both are
/// globalized by backtracking on the true objective and never move an entry
/// more than halfway to zero. Columns that vanish are dropped from the
/// support; dropped actions are re-tested for profitable re-entry once the
/// remaining problem has converged.
///
/// Does not throw on non-convergence: the best iterate is returned with
/// converged = false.
SolveResult solve_llr(const DecisionProblem& problem, const BetaMatrix& beta,
                      const SolveOptions& opts = {});

/// Maximizes expected utility minus lambda times mutual information by the
/// damped fixed-point iteration
///   mu_i(a) ~ pbar(a) exp(u(a,i)/lambda),  pbar <- (pbar + q'mu) / 2.
/// `foc_residual` in the result is the fixed-point residual.
SolveResult solve_mutual_information(const DecisionProblem& problem, double lambda,
                                     const SolveOptions& opts = {});

/// max_{i,a} |mu_i(a) - pbar(a) e^{u(a,i)/lambda} / sum_b pbar(b) e^{u(b,i)/lambda}|
/// with pbar the unconditional action distribution of `rule`.
double mi_fixed_point_residual(const DecisionProblem& problem, double lambda,
                               const ChoiceRule& rule);

/// lambda * I(state; action) for the rule under the problem's prior.
double mutual_information_of_rule(const DecisionProblem& problem, const ChoiceRule& rule,
                                  double lambda);

}  // namespace infocost
