#pragma once

#include <cstdint>
#include <vector>

#include "infocost/beta_matrix.hpp"
#include "infocost/experiment.hpp"

namespace infocost {

/// A proper, non-empty subset H of the state indices.
class Hypothesis {
 public:
  /// Throws InvalidHypothesis if H is empty, equals the whole space, or
  /// contains an index >= num_states.
  Hypothesis(std::vector<std::size_t> members, std::size_t num_states);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t num_states() const noexcept { return in_.size(); }
  bool contains(std::size_t i) const { return in_[i]; }

 private:
  std::vector<std::size_t> members_;
  std::vector<bool> in_;
};

/// sum_{i in H, j not in H} (beta_ij + beta_ji), by direct enumeration.
double partition_coefficient(const BetaMatrix& beta, const Hypothesis& h);

/// Cost of the two-signal test that reports the correct side of H with
/// probability alpha in every state. Throws AlphaOutOfRange.
double hypothesis_test_cost(const BetaMatrix& beta, const Hypothesis& h, double alpha);

/// Explicit experiment with signals {"H", "Hc"}: mu_i(s) = alpha iff i in s.
Experiment hypothesis_test_experiment(const StateSpace& states, const Hypothesis& h, double alpha);

/// Integer grid {first, ..., last} with the unnormalized rule
/// beta_ij = kappa / (i - j)^2. Never materializes the |grid|^2 matrix.
struct InverseSquareGrid {
  std::int64_t first = 0;
  std::int64_t last = 0;
  double kappa = 1.0;

  std::int64_t size() const { return last - first + 1; }
  StateSpace states() const;
  BetaMatrix betas() const;
};

/// Hypotheses with a closed-form count of crossing pairs per distance.
struct GridHypothesis {
  enum class Kind { Above, Even };
  Kind kind = Kind::Above;
  std::int64_t threshold = 0;  // H = {i > threshold} for Kind::Above

  static GridHypothesis above(std::int64_t threshold) { return {Kind::Above, threshold}; }
  static GridHypothesis even() { return {Kind::Even, 0}; }

  bool contains(std::int64_t value) const;
  /// Materialized hypothesis over grid indices.
  Hypothesis on(const InverseSquareGrid& grid) const;
};

/// Number of unordered pairs {x, x + d} in the grid that straddle H, for
/// d = 1..size-1 (entry d-1).
std::vector<std::int64_t> crossing_pair_counts(const InverseSquareGrid& grid,
                                               const GridHypothesis& h);

/// Same quantity by enumerating all pairs; O(size^2), for cross-checking.
std::vector<std::int64_t> crossing_pair_counts_naive(const InverseSquareGrid& grid,
                                                     const GridHypothesis& h);

/// sum over distances of 2 kappa count(d) / d^2.
double partition_coefficient(const InverseSquareGrid& grid, const GridHypothesis& h);

double hypothesis_test_cost(const InverseSquareGrid& grid, const GridHypothesis& h, double alpha);

}  // namespace infocost
