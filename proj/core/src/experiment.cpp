#include "infocost/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infocost/error.hpp"
#include "internal.hpp"

namespace infocost {

namespace {

void check_rows(const Matrix& probs) {
  for (Eigen::Index i = 0; i < probs.rows(); ++i) {
    double sum = 0.0;
    for (Eigen::Index s = 0; s < probs.cols(); ++s) {
      const double v = probs(i, s);
      if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "probabilities must be finite");
      if (v <= kPositivityFloor)
        fail(ErrorCode::NonPositiveEntry, "row " + std::to_string(i) + ", column " +
                                              std::to_string(s) + " is not strictly positive");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
      fail(ErrorCode::RowSumViolation,
           "row " + std::to_string(i) + " sums to " + std::to_string(sum));
  }
}

void check_same_states(const Experiment& a, const Experiment& b) {
  if (!(a.states() == b.states()))
    fail(ErrorCode::StateSpaceMismatch, "experiments are defined on different state spaces");
}

}  // namespace

Experiment make_experiment(StateSpace states, std::vector<std::string> signals, Matrix probs) {
  if (static_cast<std::size_t>(probs.rows()) != states.size())
    fail(ErrorCode::DimensionMismatch, "probability matrix needs one row per state");
  if (static_cast<std::size_t>(probs.cols()) != signals.size() || signals.empty())
    fail(ErrorCode::DimensionMismatch, "probability matrix needs one column per signal");
  check_rows(probs);
  return Experiment(std::move(states), std::move(signals), std::move(probs));
}

Experiment make_normalized_experiment(StateSpace states, std::vector<std::string> signals,
                                      Matrix probs) {
  for (Eigen::Index i = 0; i < probs.rows(); ++i) {
    const double sum = probs.row(i).sum();
    if (sum > 0.0) probs.row(i) /= sum;
  }
  return make_experiment(std::move(states), std::move(signals), std::move(probs));
}

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Experiment uninformative(const StateSpace& states) {
  return make_experiment(states, {"s"}, Matrix::Ones(states.size(), 1));
}

Experiment binary_experiment(double p) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::POutOfRange, "accuracy must lie in (0, 1)");
  return make_experiment(StateSpace({"0", "1"}), {"s0", "s1"},
                         matrix_from_rows({{p, 1.0 - p}, {1.0 - p, p}}));
}

void validate(const GarblingMatrix& g) {
  for (Eigen::Index r = 0; r < g.probs.rows(); ++r) {
    double sum = 0.0;
    for (Eigen::Index c = 0; c < g.probs.cols(); ++c) {
      const double v = g.probs(r, c);
      if (!(v >= 0.0) || !std::isfinite(v))
        fail(ErrorCode::NonPositiveEntry, "garbling entries must be non-negative");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
      fail(ErrorCode::RowSumViolation, "garbling row " + std::to_string(r) + " does not sum to 1");
  }
  if (!g.targets.empty() && g.targets.size() != static_cast<std::size_t>(g.probs.cols()))
    fail(ErrorCode::DimensionMismatch, "one target label per garbling column");
}

GarblingMatrix identity_garbling(std::size_t n) {
  return {Matrix::Identity(n, n), {}};
}

GarblingMatrix symmetric_noise(double t) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::InvalidArgument, "noise level must lie in [0, 1]");
  return {matrix_from_rows({{1.0 - t, t}, {t, 1.0 - t}}), {}};
}

Experiment product(const Experiment& a, const Experiment& b) {
  check_same_states(a, b);
  const auto na = a.num_signals();
  const auto nb = b.num_signals();
  std::vector<std::string> signals;
  signals.reserve(na * nb);
  for (const auto& s : a.signals())
    for (const auto& t : b.signals()) signals.push_back("(" + s + "," + t + ")");

  Matrix probs(a.num_states(), na * nb);
  for (std::size_t i = 0; i < a.num_states(); ++i)
    for (std::size_t s = 0; s < na; ++s)
      for (std::size_t t = 0; t < nb; ++t)
        probs(i, s * nb + t) = a.probs()(i, s) * b.probs()(i, t);
  return make_experiment(a.states(), std::move(signals), std::move(probs));
}

Experiment power(const Experiment& mu, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "power needs k >= 1");
  Experiment result = mu;
  for (int j = 1; j < k; ++j) result = product(result, mu);
  return result;
}

Experiment sufficient_power(const Experiment& mu, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "power needs k >= 1");
  const std::size_t m = mu.num_signals();
  const auto n = static_cast<Eigen::Index>(mu.num_states());

  std::vector<std::vector<int>> types;
  std::vector<int> counts(m, 0);
  auto rec = [&](auto&& self, std::size_t s, int left) -> void {
    if (s + 1 == m) {
      counts[s] = left;
      types.push_back(counts);
      return;
    }
    for (int c = left; c >= 0; --c) {
      counts[s] = c;
      self(self, s + 1, left - c);
    }
  };
  rec(rec, 0, k);

  std::vector<std::string> signals;
  Matrix probs(n, static_cast<Eigen::Index>(types.size()));
  for (std::size_t t = 0; t < types.size(); ++t) {
    std::string name = "[";
    double log_coef = std::lgamma(k + 1.0);
    for (std::size_t s = 0; s < m; ++s) {
      name += (s ? "," : "") + std::to_string(types[t][s]);
      log_coef -= std::lgamma(types[t][s] + 1.0);
    }
    signals.push_back(name + "]");
    for (Eigen::Index i = 0; i < n; ++i) {
      double lp = log_coef;
      for (std::size_t s = 0; s < m; ++s)
        if (types[t][s] > 0) lp += types[t][s] * std::log(mu.probs()(i, static_cast<Eigen::Index>(s)));
      probs(i, static_cast<Eigen::Index>(t)) = std::exp(lp);
    }
  }
  return make_experiment(mu.states(), std::move(signals), std::move(probs));
}

Experiment dilute(const Experiment& mu, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    fail(ErrorCode::AlphaOutOfRange, "dilution weight must lie in (0, 1]");
  if (alpha == 1.0) return mu;

  std::string fresh = "o";
  const auto& existing = mu.signals();
  for (int counter = 1; std::find(existing.begin(), existing.end(), fresh) != existing.end();
       ++counter)
    fresh = "o" + std::to_string(counter);

  std::vector<std::string> signals = existing;
  signals.push_back(fresh);
  Matrix probs(mu.num_states(), mu.num_signals() + 1);
  probs.leftCols(mu.num_signals()) = alpha * mu.probs();
  probs.col(mu.num_signals()).setConstant(1.0 - alpha);
  return make_experiment(mu.states(), std::move(signals), std::move(probs));
}

Experiment garble(const Experiment& mu, const GarblingMatrix& g) {
  if (static_cast<std::size_t>(g.probs.rows()) != mu.num_signals())
    fail(ErrorCode::DimensionMismatch, "garbling needs one row per source signal");
  validate(g);
  std::vector<std::string> targets = g.targets;
  if (targets.empty())
    for (Eigen::Index c = 0; c < g.probs.cols(); ++c) targets.push_back("g" + std::to_string(c));
  Matrix probs = mu.probs() * g.probs;
  return make_experiment(mu.states(), std::move(targets), std::move(probs));
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size() || p.empty())
    fail(ErrorCode::DimensionMismatch, "KL divergence needs rows of equal length");
  for (auto row : {p, q}) {
    double sum = 0.0;
    for (double v : row) {
      if (!(v > kPositivityFloor) || !std::isfinite(v))
        fail(ErrorCode::NonPositiveEntry, "KL divergence needs strictly positive rows");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
      fail(ErrorCode::RowSumViolation, "KL divergence needs probability rows");
  }
  return detail::kl_unchecked(p, q);
}

void validate_prior(std::span<const double> prior, std::size_t n, ErrorCode support_code) {
  if (prior.size() != n) fail(ErrorCode::DimensionMismatch, "prior needs one entry per state");
  double sum = 0.0;
  for (double v : prior) {
    if (!(v > 0.0) || !std::isfinite(v))
      fail(support_code, "prior must give positive probability to every state");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kRowSumTolerance)
    fail(ErrorCode::RowSumViolation, "prior must sum to 1");
}

std::vector<PosteriorAtom> posterior_distribution(const Experiment& mu,
                                                  std::span<const double> prior) {
  const std::size_t n = mu.num_states();
  validate_prior(prior, n, ErrorCode::PriorNotFullSupport);
  std::vector<PosteriorAtom> atoms(mu.num_signals());
  for (std::size_t s = 0; s < mu.num_signals(); ++s) {
    auto& atom = atoms[s];
    atom.posterior.resize(n);
    double marginal = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      atom.posterior[i] = prior[i] * mu.probs()(i, s);
      marginal += atom.posterior[i];
    }
    for (double& p : atom.posterior) p /= marginal;
    atom.marginal = marginal;
  }
  return atoms;
}

}  // namespace infocost
