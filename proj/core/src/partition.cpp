#include "infocost/partition.hpp"

#include <algorithm>
#include <cmath>

#include "infocost/costs.hpp"
#include "infocost/error.hpp"
#include "exact_sum.hpp"

namespace infocost {

namespace {

double alpha_factor(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, 1)");
  return alpha * std::log(alpha / (1.0 - alpha)) + (1.0 - alpha) * std::log((1.0 - alpha) / alpha);
}

// Same expression as inverse_square_betas, so both routes see identical terms.
double grid_beta(double kappa, std::int64_t d) {
  const double dd = static_cast<double>(d);
  return kappa / (1.0 * dd * dd);
}

}  // namespace

Hypothesis::Hypothesis(std::vector<std::size_t> members, std::size_t num_states)
    : members_(std::move(members)), in_(num_states, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) fail(ErrorCode::InvalidHypothesis, "hypothesis must be non-empty");
  if (members_.back() >= num_states)
    fail(ErrorCode::InvalidHypothesis, "hypothesis refers to an unknown state");
  if (members_.size() == num_states)
    fail(ErrorCode::InvalidHypothesis, "hypothesis must have a non-empty complement");
  for (auto i : members_) in_[i] = true;
}

double partition_coefficient(const BetaMatrix& beta, const Hypothesis& h) {
  if (beta.size() != h.num_states())
    fail(ErrorCode::DimensionMismatch, "hypothesis and beta use different state counts");
  detail::ExactSum sum;
  for (std::size_t i : h.members())
    for (std::size_t j = 0; j < beta.size(); ++j)
      if (!h.contains(j)) sum.add(beta(i, j) + beta(j, i));
  return sum.value();
}

double hypothesis_test_cost(const BetaMatrix& beta, const Hypothesis& h, double alpha) {
  return partition_coefficient(beta, h) * alpha_factor(alpha);
}

Experiment hypothesis_test_experiment(const StateSpace& states, const Hypothesis& h, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, 1)");
  if (states.size() != h.num_states())
    fail(ErrorCode::DimensionMismatch, "hypothesis and states differ in size");
  Matrix probs(states.size(), 2);
  for (std::size_t i = 0; i < states.size(); ++i) {
    probs(i, 0) = h.contains(i) ? alpha : 1.0 - alpha;
    probs(i, 1) = 1.0 - probs(i, 0);
  }
  return make_experiment(states, {"H", "Hc"}, std::move(probs));
}

StateSpace InverseSquareGrid::states() const {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(size()));
  for (std::int64_t v = first; v <= last; ++v) values.push_back(static_cast<double>(v));
  return StateSpace::from_values(std::move(values));
}

BetaMatrix InverseSquareGrid::betas() const { return inverse_square_betas(states(), kappa); }

bool GridHypothesis::contains(std::int64_t value) const {
  return kind == Kind::Above ? value > threshold : value % 2 == 0;
}

Hypothesis GridHypothesis::on(const InverseSquareGrid& grid) const {
  std::vector<std::size_t> members;
  for (std::int64_t v = grid.first; v <= grid.last; ++v)
    if (contains(v)) members.push_back(static_cast<std::size_t>(v - grid.first));
  return Hypothesis(std::move(members), static_cast<std::size_t>(grid.size()));
}

std::vector<std::int64_t> crossing_pair_counts(const InverseSquareGrid& grid,
                                               const GridHypothesis& h) {
  if (grid.size() < 2) fail(ErrorCode::TooFewStates, "grid needs at least two points");
  const std::int64_t n = grid.size();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n - 1), 0);
  for (std::int64_t d = 1; d < n; ++d) {
    std::int64_t c = 0;
    if (h.kind == GridHypothesis::Kind::Above) {
      // pairs (x, x + d) with x <= t < x + d inside [first, last]
      const std::int64_t lo = std::max(grid.first, h.threshold - d + 1);
      const std::int64_t hi = std::min(h.threshold, grid.last - d);
      c = std::max<std::int64_t>(0, hi - lo + 1);
    } else {
      c = (d % 2 == 1) ? n - d : 0;
    }
    counts[static_cast<std::size_t>(d - 1)] = c;
  }
  return counts;
}

std::vector<std::int64_t> crossing_pair_counts_naive(const InverseSquareGrid& grid,
                                                     const GridHypothesis& h) {
  const std::int64_t n = grid.size();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(n - 1, 0)), 0);
  for (std::int64_t x = grid.first; x <= grid.last; ++x)
    for (std::int64_t y = x + 1; y <= grid.last; ++y)
      if (h.contains(x) != h.contains(y)) ++counts[static_cast<std::size_t>(y - x - 1)];
  return counts;
}

double partition_coefficient(const InverseSquareGrid& grid, const GridHypothesis& h) {
  const auto counts = crossing_pair_counts(grid, h);
  detail::ExactSum sum;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const double b = grid_beta(grid.kappa, static_cast<std::int64_t>(k + 1));
    // each unordered crossing pair contributes beta_ij + beta_ji
    sum.add_scaled(b + b, static_cast<double>(counts[k]));
  }
  return sum.value();
}

double hypothesis_test_cost(const InverseSquareGrid& grid, const GridHypothesis& h, double alpha) {
  return partition_coefficient(grid, h) * alpha_factor(alpha);
}

}  // namespace infocost
