#include "infocost/decision_problem.hpp"

#include <cmath>

#include "infocost/error.hpp"
#include "infocost/experiment.hpp"

namespace infocost {

double DecisionProblem::utility_norm() const { return utility.cwiseAbs().maxCoeff(); }

void validate(const DecisionProblem& problem) {
  if (problem.actions.empty()) fail(ErrorCode::DimensionMismatch, "at least one action is needed");
  if (static_cast<std::size_t>(problem.utility.rows()) != problem.num_actions() ||
      static_cast<std::size_t>(problem.utility.cols()) != problem.num_states())
    fail(ErrorCode::DimensionMismatch, "utility must be |actions| x |states|");
  if (!problem.utility.allFinite()) fail(ErrorCode::InvalidArgument, "utility must be finite");
  validate_prior(problem.prior, problem.num_states(), ErrorCode::PriorNotFullSupport);
}

void validate(const ChoiceRule& rule) {
  for (Eigen::Index i = 0; i < rule.probs.rows(); ++i) {
    if ((rule.probs.row(i).array() < 0.0).any() || !rule.probs.row(i).allFinite())
      fail(ErrorCode::InvalidArgument, "choice probabilities must be non-negative");
    if (std::abs(rule.probs.row(i).sum() - 1.0) > kRowSumTolerance)
      fail(ErrorCode::RowSumViolation, "choice rule rows must sum to 1");
  }
}

ChoiceRule constant_rule(std::size_t num_states, std::span<const double> action_probs) {
  ChoiceRule rule{Matrix(num_states, action_probs.size())};
  for (std::size_t i = 0; i < num_states; ++i)
    for (std::size_t a = 0; a < action_probs.size(); ++a) rule.probs(i, a) = action_probs[a];
  return rule;
}

}  // namespace infocost
