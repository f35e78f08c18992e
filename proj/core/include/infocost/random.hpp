#pragma once

#include <cstdint>

#include "infocost/beta_matrix.hpp"
#include "infocost/cumulants.hpp"
#include "infocost/decision_problem.hpp"
#include "infocost/experiment.hpp"

namespace infocost {

/// xoshiro256** 1.0 seeded through splitmix64. Given the same seed every
/// platform produces the same stream:
///   result = rotl(s1 * 5, 7) * 9
///   t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t; s3 = rotl(s3, 45)
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Uniform on {0, ..., n-1}.
  std::size_t index(std::size_t n);
  /// Uniform on {lo, ..., hi}.
  int integer(int lo, int hi);

 private:
  std::uint64_t s_[4];
};

/// Strictly positive probability row: flat Dirichlet draw mixed with 1e-3
/// of the uniform row, so every entry is at least 1e-3 / k.
Distribution random_row(Rng& rng, std::size_t k);

Experiment random_experiment(Rng& rng, const StateSpace& states, std::size_t num_signals);

/// Off-diagonal coefficients uniform on [lo, hi].
BetaMatrix random_beta(Rng& rng, const StateSpace& states, double lo, double hi);

/// Row-stochastic with strictly positive entries.
GarblingMatrix random_garbling(Rng& rng, std::size_t from, std::size_t to);

/// Utilities uniform on [-1, 1], random full-support prior.
DecisionProblem random_problem(Rng& rng, std::size_t num_states, std::size_t num_actions);

/// `size` atoms uniform on [-1, 1]^dim with random weights.
FiniteDistribution random_distribution(Rng& rng, int dim, std::size_t size);

}  // namespace infocost
