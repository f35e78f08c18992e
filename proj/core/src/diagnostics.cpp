#include "infocost/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "infocost/beta_matrix.hpp"
#include "infocost/error.hpp"

namespace infocost {

DecisionProblem perception_problem(int r) {
  if (r < 1 || r > 50) fail(ErrorCode::InvalidArgument, "r must lie in [1, 50]");
  std::vector<double> values;
  for (int i = 50 - r; i <= 50 + r; ++i)
    if (i != 50) values.push_back(i);
  const auto n = static_cast<Eigen::Index>(values.size());

  DecisionProblem problem{StateSpace::from_values(values), {"R", "B"}, Matrix::Zero(2, n),
                          Distribution(values.size(), 1.0 / static_cast<double>(n))};
  for (Eigen::Index i = 0; i < n; ++i) {
    if (values[i] > 50) problem.utility(1, i) = 1.0;
    else problem.utility(0, i) = 1.0;
  }
  return problem;
}

PsychometricCurve psychometric_curve(int r, double kappa, CostKind kind, double lambda,
                                     const SolveOptions& opts) {
  const DecisionProblem problem = perception_problem(r);
  PsychometricCurve curve;
  if (kind == CostKind::Llr)
    curve.solve = solve_llr(problem, inverse_square_betas(problem.states, kappa), opts);
  else
    curve.solve = solve_mutual_information(problem, lambda, opts);

  const auto& values = *problem.states.values();
  const Matrix& mu = curve.solve.rule.probs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    PsychometricPoint p;
    p.state = static_cast<int>(values[i]);
    p.prob_red = mu(i, 0);
    p.prob_blue = mu(i, 1);
    p.prob_correct = p.state > 50 ? p.prob_blue : p.prob_red;
    curve.points.push_back(p);
  }
  return curve;
}

LipschitzReport lipschitz_check(const ChoiceRule& rule, std::span<const double> values,
                                double u_norm, double gamma) {
  const Matrix& mu = rule.probs;
  if (values.size() != static_cast<std::size_t>(mu.rows()))
    fail(ErrorCode::DimensionMismatch, "one value per state is required");
  if (!(u_norm > 0.0)) fail(ErrorCode::InvalidArgument, "utility norm must be positive");
  const double root = std::sqrt(u_norm);

  LipschitzReport report;
  for (Eigen::Index i = 0; i < mu.rows(); ++i)
    for (Eigen::Index j = i + 1; j < mu.rows(); ++j) {
      const double d = std::abs(values[i] - values[j]);
      if (d == 0.0) fail(ErrorCode::DuplicateValues, "state values must be distinct");
      const double bound = root * std::pow(d, gamma / 2.0);
      for (Eigen::Index a = 0; a < mu.cols(); ++a)
        report.max_ratio = std::max(report.max_ratio, std::abs(mu(i, a) - mu(j, a)) / bound);
    }
  report.holds = report.max_ratio <= 1.0 + 1e-9;
  return report;
}

}  // namespace infocost
