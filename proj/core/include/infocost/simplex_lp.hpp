#pragma once

#include <vector>

#include "infocost/types.hpp"

namespace infocost::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Result {
  Status status = Status::Infeasible;
  Vector x;
  double objective = 0.0;
  int iterations = 0;
};

struct Options {
  double pivot_tolerance = 1e-11;
  double feasibility_tolerance = 1e-9;
  int max_iterations = 100000;
};

/// Dense two-phase primal simplex for
///   minimize c'x  subject to  A x = b,  x >= 0.
/// Pivoting follows Bland's smallest-index rule, so it terminates without
/// cycling. Intended for problems with at most a few hundred variables.
Result minimize(const Vector& c, const Matrix& A, const Vector& b, const Options& opts = {});

}  // namespace infocost::lp
