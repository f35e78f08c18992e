#pragma once

#include <span>
#include <string>
#include <vector>

#include "infocost/error.hpp"
#include "infocost/state_space.hpp"
#include "infocost/types.hpp"

namespace infocost {

/// A finite Blackwell experiment: one distribution over a common signal set
/// per state. Every entry is strictly positive, so no signal rules out a state.
class Experiment {
 public:
  const StateSpace& states() const noexcept { return states_; }
  const std::vector<std::string>& signals() const noexcept { return signals_; }
  const Matrix& probs() const noexcept { return probs_; }

  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_signals() const noexcept { return signals_.size(); }
  std::span<const double> row(std::size_t state) const {
    return row_span(probs_, static_cast<Eigen::Index>(state));
  }

 private:
  friend Experiment make_experiment(StateSpace, std::vector<std::string>, Matrix);

  Experiment(StateSpace states, std::vector<std::string> signals, Matrix probs)
      : states_(std::move(states)), signals_(std::move(signals)), probs_(std::move(probs)) {}

  StateSpace states_;
  std::vector<std::string> signals_;
  Matrix probs_;
};

/// Validating constructor.
/// Throws DimensionMismatch, NonPositiveEntry (entry <= 1e-12) or
/// RowSumViolation (|row sum - 1| > 1e-9). Rows are never renormalized.
Experiment make_experiment(StateSpace states, std::vector<std::string> signals, Matrix probs);

/// Convenience constructor that rescales each row of `probs` to sum to one
/// before validating. Positivity is still enforced.
Experiment make_normalized_experiment(StateSpace states, std::vector<std::string> signals,
                                      Matrix probs);

/// Builds a matrix from nested rows; used by tests and parsers.
Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows);

/// Experiment with a single signal: every state produces the same outcome.
Experiment uninformative(const StateSpace& states);

/// Two-state symmetric binary experiment with accuracy `p`: state 0 emits
/// "s0" with probability p, state 1 emits "s1" with probability p.
Experiment binary_experiment(double p);

/// Row-stochastic post-processing of signals.
struct GarblingMatrix {
  Matrix probs;                   // rows: source signals, cols: target signals
  std::vector<std::string> targets;  // optional target labels; defaults to "g0", "g1", ...
};

/// Throws RowSumViolation or NonPositiveEntry (for negative entries).
void validate(const GarblingMatrix& g);

GarblingMatrix identity_garbling(std::size_t n);

/// Two-signal symmetric noise: keep the signal with probability 1 - t.
GarblingMatrix symmetric_noise(double t);

/// Independent joint observation of `a` and `b`. Signals are pairs "(s,t)" in
/// row-major order over a.signals x b.signals. Throws StateSpaceMismatch.
Experiment product(const Experiment& a, const Experiment& b);

/// k-fold product of `mu` with itself.
Experiment power(const Experiment& mu, int k);

/// Experiment equivalent to power(mu, k) whose signals are the count
/// vectors of the k draws, e.g. "[2,0,1]". The counts are a sufficient
/// statistic, so the two share their LLR distribution, but this one has
/// C(k+m-1, m-1) signals instead of m^k.
Experiment sufficient_power(const Experiment& mu, int k);

/// With probability `alpha` run `mu`, otherwise emit the fresh symbol "o".
/// alpha must lie in (0, 1]; alpha = 1 returns `mu` unchanged.
Experiment dilute(const Experiment& mu, double alpha);

/// Signal-wise post-processing: probs = mu.probs * g.probs.
Experiment garble(const Experiment& mu, const GarblingMatrix& g);

/// Natural-log Kullback-Leibler divergence sum p ln(p/q) between two
/// strictly positive probability rows.
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// Posterior over states after one signal realisation together with the
/// unconditional probability of that realisation.
struct PosteriorAtom {
  Distribution posterior;
  double marginal = 0.0;
};

/// One atom per signal, in signal order. Throws PriorNotFullSupport.
std::vector<PosteriorAtom> posterior_distribution(const Experiment& mu,
                                                  std::span<const double> prior);

/// Throws unless `prior` is a full-support probability row of length n.
void validate_prior(std::span<const double> prior, std::size_t n,
                    ErrorCode code_on_support_failure);

}  // namespace infocost
