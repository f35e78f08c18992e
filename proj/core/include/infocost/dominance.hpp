#pragma once

#include "infocost/experiment.hpp"

namespace infocost {

/// Best garbling of `mu` towards `nu` in the sup norm.
struct GarblingFit {
  GarblingMatrix garbling;
  double residual = 0.0;  // min over garblings g of ||mu.probs * g - nu.probs||_inf
};

/// Solves the linear program min t s.t. |(mu.probs g - nu.probs)_{it}| <= t
/// over row-stochastic g. Throws StateSpaceMismatch or SolverFailure.
GarblingFit fit_garbling(const Experiment& mu, const Experiment& nu);

/// True iff `nu` is a garbling of `mu` up to `tol` in the sup norm.
bool blackwell_dominates(const Experiment& mu, const Experiment& nu, double tol = 1e-8);

}  // namespace infocost
