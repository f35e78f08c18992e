#pragma once

#include <string>
#include <string_view>

#include "infocost/beta_matrix.hpp"
#include "infocost/decision_problem.hpp"
#include "infocost/experiment.hpp"
#include "infocost/solver.hpp"

namespace infocost {

/// Reads a whole file. Throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

/// {"states": [...], "values": [...]?, "signals": [...], "probs": [[...], ...]}
/// Malformed JSON or missing fields throw ParseError; the experiment
/// invariants throw their own codes.
Experiment parse_experiment(std::string_view text);

/// One of
///   {"coef": [[...], ...]}            explicit matrix (diagonal ignored)
///   {"rule": "constant", "value": x}
///   {"rule": "one_dimensional", "kappa": x}
///   {"rule": "inverse_square", "kappa": x}
/// resolved against `states`.
BetaMatrix parse_beta(std::string_view text, const StateSpace& states);

/// {"states": [...], "values": [...]?, "actions": [...], "utility": [[u(a,i)]],
///  "prior": [...]}
DecisionProblem parse_problem(std::string_view text);

std::string to_json(const Experiment& mu);

/// Rule rows keyed by state label, plus scalar diagnostics and warnings.
std::string to_json(const SolveResult& result, const DecisionProblem& problem);

/// Nine significant digits, the format used for every CSV cell.
std::string format_number(double x);

}  // namespace infocost
