#pragma once

#include <string>
#include <vector>

#include "infocost/state_space.hpp"
#include "infocost/types.hpp"

namespace infocost {

/// Finite decision problem: utility(a, i) is the payoff of action a in state
/// i, and `prior` is a full-support belief over states.
struct DecisionProblem {
  StateSpace states;
  std::vector<std::string> actions;
  Matrix utility;  // |actions| x |states|
  Distribution prior;

  std::size_t num_states() const { return states.size(); }
  std::size_t num_actions() const { return actions.size(); }
  /// max_{a,i} |u(a, i)|
  double utility_norm() const;
};

/// Throws DimensionMismatch, PriorNotFullSupport or InvalidArgument.
void validate(const DecisionProblem& problem);

/// State-dependent distribution over actions; row i is mu_i.
struct ChoiceRule {
  Matrix probs;  // |states| x |actions|
};

/// Rows must sum to one and entries be non-negative.
void validate(const ChoiceRule& rule);

/// The same action distribution in every state.
ChoiceRule constant_rule(std::size_t num_states, std::span<const double> action_probs);

}  // namespace infocost
