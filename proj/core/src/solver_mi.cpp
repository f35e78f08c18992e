#include <cmath>
#include <limits>

#include "infocost/error.hpp"
#include "infocost/solver.hpp"

namespace infocost {

namespace {

constexpr double kDamping = 0.5;
constexpr double kMaxRelaxation = 1e12;

// mu_i(a) proportional to pbar(a) exp(u(a,i)/lambda), computed with a
// per-state shift so large utilities do not overflow.
Matrix tilted_rule(const DecisionProblem& problem, double lambda, const Vector& pbar) {
  const auto n = static_cast<Eigen::Index>(problem.num_states());
  const auto m = static_cast<Eigen::Index>(problem.num_actions());
  Matrix mu(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double top = problem.utility.col(i).maxCoeff();
    double z = 0.0;
    for (Eigen::Index a = 0; a < m; ++a) {
      mu(i, a) = pbar(a) * std::exp((problem.utility(a, i) - top) / lambda);
      z += mu(i, a);
    }
    mu.row(i) /= z;
  }
  return mu;
}

Vector action_marginal(const DecisionProblem& problem, const Matrix& mu) {
  Vector pbar = Vector::Zero(mu.cols());
  for (Eigen::Index i = 0; i < mu.rows(); ++i) pbar += problem.prior[i] * mu.row(i).transpose();
  return pbar;
}

// Concave dual objective sum_i q_i ln sum_a pbar(a) exp(u(a,i)/lambda), up
// to a constant. The fixed point of the iteration maximizes it.
double dual_value(const DecisionProblem& problem, double lambda, const Vector& pbar) {
  double v = 0.0;
  for (Eigen::Index i = 0; i < problem.utility.cols(); ++i) {
    const double top = problem.utility.col(i).maxCoeff();
    double z = 0.0;
    for (Eigen::Index a = 0; a < pbar.size(); ++a)
      z += pbar(a) * std::exp((problem.utility(a, i) - top) / lambda);
    v += problem.prior[i] * std::log(z);
  }
  return v;
}

// pbar * (implied / pbar)^eta, renormalized. eta = 1 is the plain update;
// larger eta extrapolates along the multiplicative direction.
Vector relaxed(const Vector& pbar, const Vector& implied, double eta) {
  Vector logs(pbar.size());
  for (Eigen::Index a = 0; a < pbar.size(); ++a)
    logs(a) = pbar(a) > 0.0 ? std::log(pbar(a)) + eta * std::log(implied(a) / pbar(a))
                            : -std::numeric_limits<double>::infinity();
  const double top = logs.maxCoeff();
  Vector out = (logs.array() - top).exp().matrix();
  return out / out.sum();
}

}  // namespace

double mi_fixed_point_residual(const DecisionProblem& problem, double lambda,
                               const ChoiceRule& rule) {
  const Vector pbar = action_marginal(problem, rule.probs);
  const Matrix target = tilted_rule(problem, lambda, pbar);
  return (rule.probs - target).cwiseAbs().maxCoeff();
}

double mutual_information_of_rule(const DecisionProblem& problem, const ChoiceRule& rule,
                                  double lambda) {
  const Vector pbar = action_marginal(problem, rule.probs);
  double info = 0.0;
  for (Eigen::Index i = 0; i < rule.probs.rows(); ++i)
    for (Eigen::Index a = 0; a < rule.probs.cols(); ++a) {
      const double p = rule.probs(i, a);
      if (p > 0.0) info += problem.prior[i] * p * std::log(p / pbar(a));
    }
  return lambda * info;
}

SolveResult solve_mutual_information(const DecisionProblem& problem, double lambda,
                                     const SolveOptions& opts) {
  validate(problem);
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    fail(ErrorCode::InvalidArgument, "lambda must be positive");

  const auto m = static_cast<Eigen::Index>(problem.num_actions());
  Vector pbar = Vector::Constant(m, 1.0 / static_cast<double>(m));
  Matrix mu = tilted_rule(problem, lambda, pbar);

  SolveResult result;
  double residual = std::numeric_limits<double>::infinity();
  int iter = 0;
  double eta = 2.0;
  for (; iter < opts.max_iterations; ++iter) {
    const Vector implied = action_marginal(problem, mu);
    const Matrix next = tilted_rule(problem, lambda, implied);
    residual = (mu - next).cwiseAbs().maxCoeff();
    if (residual <= opts.tolerance) {
      result.converged = true;
      break;
    }
    // The damped step never lowers the dual objective. When utilities are
    // small relative to lambda it crawls toward the optimum, so an
    // over-relaxed step is tried as well and kept when it does better.
    const Vector damped = (1.0 - kDamping) * pbar + kDamping * implied;
    const Vector bold = relaxed(pbar, implied, eta);
    if (dual_value(problem, lambda, bold) > dual_value(problem, lambda, damped)) {
      pbar = bold;
      eta = std::min(2.0 * eta, kMaxRelaxation);
    } else {
      pbar = damped;
      eta = std::max(2.0, 0.25 * eta);
    }
    mu = tilted_rule(problem, lambda, pbar);
  }

  result.rule.probs = mu;
  result.iterations = iter;
  result.foc_residual = residual;
  result.support.assign(problem.num_actions(), false);
  for (Eigen::Index a = 0; a < m; ++a) result.support[a] = mu.col(a).maxCoeff() > kSupportThreshold;
  result.expected_utility = expected_utility(problem, result.rule);
  result.cost = mutual_information_of_rule(problem, result.rule, lambda);
  result.objective = result.expected_utility - result.cost;
  return result;
}

}  // namespace infocost
