#pragma once

#include <vector>

#include "infocost/experiment.hpp"
#include "infocost/types.hpp"

namespace infocost {

/// Joint law of the log-likelihood-ratio vector xi = (ln(mu_i/mu_0))_{i>=1}
/// under each state. Row i of `weights` is the distribution of xi under
/// state i over `atoms`.
struct LLRDistribution {
  std::vector<std::vector<double>> atoms;  // each of length |states| - 1
  Matrix weights;                          // |states| x |atoms|
};

/// Signals whose LLR vectors agree componentwise within 1e-12 are merged.
/// Atoms are sorted lexicographically so that Blackwell-equivalent
/// experiments yield the same distribution.
LLRDistribution llr_distribution(const Experiment& mu);

/// True iff |sigma_i(xi) - e^{xi_i} sigma_0(xi)| <= tol for every atom and i >= 1.
bool check_admissible(const LLRDistribution& sigma, double tol);

/// Same atoms (within `tol`, componentwise) and same weights (within `tol`).
bool equivalent(const LLRDistribution& a, const LLRDistribution& b, double tol);

}  // namespace infocost
