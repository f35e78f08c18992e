#pragma once

#include <span>
#include <vector>

#include "infocost/decision_problem.hpp"
#include "infocost/solver.hpp"

namespace infocost {

/// Dots task: the number of blue dots i is uniform on
/// {50-r, ..., 49, 51, ..., 50+r}; guessing the majority colour pays 1.
/// Actions are {"R", "B"} in that order. Throws InvalidArgument unless
/// 1 <= r <= 50.
DecisionProblem perception_problem(int r);

enum class CostKind { Llr, MutualInformation };

struct PsychometricPoint {
  int state = 0;            // number of blue dots
  double prob_blue = 0.0;   // mu_i(B)
  double prob_red = 0.0;    // mu_i(R)
  double prob_correct = 0.0;
};

struct PsychometricCurve {
  std::vector<PsychometricPoint> points;
  SolveResult solve;
};

/// Solves the dots task. The LLR cost uses beta_ij = kappa / (i - j)^2; the
/// mutual-information cost uses `lambda`.
PsychometricCurve psychometric_curve(int r, double kappa, CostKind kind, double lambda,
                                     const SolveOptions& opts = {});

struct LipschitzReport {
  double max_ratio = 0.0;
  bool holds = true;
};

/// max over (a, i, j) of |mu_i(a) - mu_j(a)| / (sqrt(u_norm) |v_i - v_j|^(gamma/2)).
/// The continuity bound holds when max_ratio <= 1 + 1e-9. Throws
/// DuplicateValues if two states share a value.
LipschitzReport lipschitz_check(const ChoiceRule& rule, std::span<const double> values,
                                double u_norm, double gamma = 2.0);

}  // namespace infocost
