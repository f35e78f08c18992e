#include <algorithm>
#include <cmath>
#include <limits>

#include "infocost/error.hpp"
#include "infocost/solver.hpp"

namespace infocost {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kBoundaryFraction = 0.5;
constexpr int kMaxBacktracks = 60;
constexpr double kReentryScale = 1e-3;

void check_dimensions(const DecisionProblem& problem, const BetaMatrix& beta) {
  validate(problem);
  if (!(problem.states == beta.states()))
    fail(ErrorCode::StateSpaceMismatch, "problem and beta use different state spaces");
}

// The objective restricted to a set of active actions. Inactive columns of
// an iterate are identically zero.
class LlrObjective {
 public:
  LlrObjective(const DecisionProblem& problem, const BetaMatrix& beta)
      : u_(problem.utility), q_(problem.prior), beta_(beta.coef()),
        n_(static_cast<Eigen::Index>(problem.num_states())),
        m_(static_cast<Eigen::Index>(problem.num_actions())) {
    for (Eigen::Index a = 0; a < m_; ++a) active_.push_back(a);
  }

  const std::vector<Eigen::Index>& active() const { return active_; }
  bool is_active(Eigen::Index a) const {
    return std::find(active_.begin(), active_.end(), a) != active_.end();
  }
  void deactivate(Eigen::Index a) { std::erase(active_, a); }
  void activate(Eigen::Index a) {
    active_.push_back(a);
    std::sort(active_.begin(), active_.end());
  }

  double value(const Matrix& x) const {
    double eu = 0.0;
    for (Eigen::Index i = 0; i < n_; ++i)
      for (Eigen::Index a : active_) eu += q_[i] * x(i, a) * u_(a, i);
    double cost = 0.0;
    for (Eigen::Index a : active_) {
      for (Eigen::Index i = 0; i < n_; ++i) {
        if (!(x(i, a) > 0.0)) return -std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < n_; ++j)
          if (j != i && beta_(i, j) != 0.0) cost += beta_(i, j) * x(i, a) * std::log(x(i, a) / x(j, a));
      }
    }
    return eu - cost;
  }

  Matrix gradient(const Matrix& x) const {
    Matrix g = Matrix::Zero(n_, m_);
    for (Eigen::Index a : active_)
      for (Eigen::Index i = 0; i < n_; ++i) {
        double d = q_[i] * u_(a, i);
        for (Eigen::Index j = 0; j < n_; ++j) {
          if (j == i) continue;
          d -= beta_(i, j) * (std::log(x(i, a) / x(j, a)) + 1.0);
          d += beta_(j, i) * x(j, a) / x(i, a);
        }
        g(i, a) = d;
      }
    return g;
  }

  // Spread of the gradient across supported actions, state by state. The
  // gradient differs from q_i u(a,i) - c(i,a) by a per-state constant.
  double residual(const Matrix& g) const {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n_; ++i) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (Eigen::Index a : active_) {
        lo = std::min(lo, g(i, a));
        hi = std::max(hi, g(i, a));
      }
      if (active_.size() > 1) worst = std::max(worst, hi - lo);
    }
    return worst;
  }

  // Newton direction for the row-sum-constrained problem. Variables are
  // ordered action-major so the cost Hessian is block diagonal.
  bool newton_direction(const Matrix& x, const Matrix& g, Matrix& d) const {
    const auto k = static_cast<Eigen::Index>(active_.size());
    const Eigen::Index nv = k * n_;
    Matrix kkt = Matrix::Zero(nv + n_, nv + n_);
    Vector rhs = Vector::Zero(nv + n_);
    double scale = 1.0;
    for (Eigen::Index b = 0; b < k; ++b) {
      const Eigen::Index a = active_[b];
      for (Eigen::Index i = 0; i < n_; ++i) {
        const Eigen::Index r = b * n_ + i;
        double diag = 0.0;
        for (Eigen::Index j = 0; j < n_; ++j) {
          if (j == i) continue;
          diag += beta_(i, j) / x(i, a) + beta_(j, i) * x(j, a) / (x(i, a) * x(i, a));
          kkt(r, b * n_ + j) = -beta_(i, j) / x(j, a) - beta_(j, i) / x(i, a);
        }
        kkt(r, r) = diag;
        scale = std::max(scale, std::abs(diag));
        kkt(r, nv + i) = 1.0;
        kkt(nv + i, r) = 1.0;
        rhs(r) = g(i, a);
      }
    }
    const double reg = 1e-12 * scale;
    for (Eigen::Index r = 0; r < nv; ++r) kkt(r, r) += reg;

    const Eigen::FullPivLU<Matrix> lu(kkt);
    const Vector sol = lu.solve(rhs);
    if (!sol.allFinite()) return false;
    d = Matrix::Zero(n_, m_);
    for (Eigen::Index b = 0; b < k; ++b)
      for (Eigen::Index i = 0; i < n_; ++i) d(i, active_[b]) = sol(b * n_ + i);
    return true;
  }

  double inner(const Matrix& a, const Matrix& b) const {
    double s = 0.0;
    for (Eigen::Index c : active_) s += a.col(c).dot(b.col(c));
    return s;
  }

  // Directional value of opening a dropped action with state profile v:
  // sum_i v_i w_i - sum_{i != j} beta_ij v_i ln(v_i / v_j), maximized over
  // the simplex by exponentiated gradient. Positive means re-entry pays.
  double entry_gain(Eigen::Index a, const Matrix& g, Vector& best_v) const {
    Vector w(n_);
    for (Eigen::Index i = 0; i < n_; ++i) {
      double lambda = 0.0;
      for (Eigen::Index b : active_) lambda += g(i, b);
      lambda /= static_cast<double>(active_.size());
      w(i) = q_[i] * u_(a, i) - lambda;
    }
    auto phi = [&](const Vector& v) {
      double s = w.dot(v);
      for (Eigen::Index i = 0; i < n_; ++i)
        for (Eigen::Index j = 0; j < n_; ++j)
          if (i != j) s -= beta_(i, j) * v(i) * std::log(v(i) / v(j));
      return s;
    };
    Vector v = Vector::Constant(n_, 1.0 / static_cast<double>(n_));
    double f = phi(v);
    double eta = 1.0;
    for (int it = 0; it < 2000; ++it) {
      Vector grad(n_);
      for (Eigen::Index i = 0; i < n_; ++i) {
        double d = w(i);
        for (Eigen::Index j = 0; j < n_; ++j) {
          if (j == i) continue;
          d -= beta_(i, j) * (std::log(v(i) / v(j)) + 1.0);
          d += beta_(j, i) * v(j) / v(i);
        }
        grad(i) = d;
      }
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        Vector next = (v.array() * (eta * (grad.array() - grad.maxCoeff())).exp()).matrix();
        next /= next.sum();
        const double fn = phi(next);
        if (fn > f) {
          moved = fn - f > 1e-15 * (1.0 + std::abs(f));
          v = next;
          f = fn;
          eta *= 2.0;
          break;
        }
        eta *= 0.5;
      }
      if (!moved) break;
    }
    best_v = v;
    return f;
  }

  Eigen::Index states() const { return n_; }
  Eigen::Index actions() const { return m_; }

 private:
  const Matrix& u_;
  const Distribution& q_;
  const Matrix& beta_;
  Eigen::Index n_;
  Eigen::Index m_;
  std::vector<Eigen::Index> active_;
};

void normalize_rows(Matrix& x) {
  for (Eigen::Index i = 0; i < x.rows(); ++i) x.row(i) /= x.row(i).sum();
}

Matrix initial_point(const DecisionProblem& problem) {
  const double temperature = 1.0 + problem.utility_norm();
  Matrix x(problem.num_states(), problem.num_actions());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index a = 0; a < x.cols(); ++a) x(i, a) = std::exp(problem.utility(a, i) / temperature);
  normalize_rows(x);
  return x;
}

}  // namespace

double expected_utility(const DecisionProblem& problem, const ChoiceRule& rule) {
  if (rule.probs.rows() != problem.utility.cols() || rule.probs.cols() != problem.utility.rows())
    fail(ErrorCode::DimensionMismatch, "choice rule must be |states| x |actions|");
  double eu = 0.0;
  for (Eigen::Index i = 0; i < rule.probs.rows(); ++i)
    for (Eigen::Index a = 0; a < rule.probs.cols(); ++a)
      eu += problem.prior[i] * rule.probs(i, a) * problem.utility(a, i);
  return eu;
}

double choice_rule_cost(const ChoiceRule& rule, const BetaMatrix& beta) {
  const Matrix& x = rule.probs;
  if (static_cast<std::size_t>(x.rows()) != beta.size())
    fail(ErrorCode::DimensionMismatch, "choice rule needs one row per state");
  double cost = 0.0;
  for (Eigen::Index a = 0; a < x.cols(); ++a)
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      if (!(x(i, a) > 0.0)) continue;
      for (Eigen::Index j = 0; j < x.rows(); ++j) {
        if (j == i || beta(i, j) == 0.0) continue;
        if (!(x(j, a) > 0.0)) return std::numeric_limits<double>::infinity();
        cost += beta(i, j) * x(i, a) * std::log(x(i, a) / x(j, a));
      }
    }
  return cost;
}

double objective(const DecisionProblem& problem, const ChoiceRule& rule, const BetaMatrix& beta) {
  return expected_utility(problem, rule) - choice_rule_cost(rule, beta);
}

double foc_residual(const DecisionProblem& problem, const BetaMatrix& beta, const ChoiceRule& rule) {
  const Matrix& x = rule.probs;
  if (rule.probs.rows() != problem.utility.cols() || rule.probs.cols() != problem.utility.rows() ||
      beta.size() != problem.num_states())
    fail(ErrorCode::DimensionMismatch, "choice rule, problem and beta disagree in size");

  std::vector<Eigen::Index> support;
  for (Eigen::Index a = 0; a < x.cols(); ++a)
    if (x.col(a).maxCoeff() > kSupportThreshold) support.push_back(a);
  for (Eigen::Index a : support)
    if (!(x.col(a).minCoeff() > 0.0))
      fail(ErrorCode::ZeroProbabilityOnSupport,
           "action " + problem.actions[a] + " has zero probability in some state");

  double worst = 0.0;
  const Eigen::Index n = x.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Eigen::Index a : support) {
      double c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += beta(i, j) * std::log(x(i, a) / x(j, a)) - beta(j, i) * x(j, a) / x(i, a);
      }
      const double r = problem.prior[i] * problem.utility(a, i) - c;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (support.size() > 1) worst = std::max(worst, hi - lo);
  }
  return worst;
}

SolveResult solve_llr(const DecisionProblem& problem, const BetaMatrix& beta,
                      const SolveOptions& opts) {
  check_dimensions(problem, beta);
  SolveResult result;
  if (!beta.strictly_positive())
    result.warnings.push_back(
        "non-strict concavity: beta has zero off-diagonal entries, the optimum may not be unique");

  LlrObjective f(problem, beta);
  Matrix x = initial_point(problem);
  double value = f.value(x);
  double improvement = std::numeric_limits<double>::infinity();
  double eta = 1.0;
  int reentries = 0;
  const int max_reentries = 2 * static_cast<int>(problem.num_actions());
  double residual = std::numeric_limits<double>::infinity();

  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    const Matrix g = f.gradient(x);
    residual = f.residual(g);

    const bool stationary = residual <= opts.tolerance;
    if (stationary && improvement <= opts.tolerance * (1.0 + std::abs(value))) {
      // Converged on the current support; check whether a dropped action
      // should come back.
      bool reopened = false;
      if (reentries < max_reentries) {
        for (Eigen::Index a = 0; a < f.actions(); ++a) {
          if (f.is_active(a)) continue;
          Vector v;
          if (f.entry_gain(a, g, v) > opts.tolerance) {
            for (Eigen::Index i = 0; i < x.rows(); ++i) {
              x.row(i) *= 1.0 - kReentryScale * v(i);
              x(i, a) = kReentryScale * v(i);
            }
            f.activate(a);
            reopened = true;
            ++reentries;
          }
        }
      }
      if (!reopened) {
        result.converged = true;
        break;
      }
      value = f.value(x);
      improvement = std::numeric_limits<double>::infinity();
      continue;
    }

    Matrix next;
    double next_value = -std::numeric_limits<double>::infinity();
    bool stepped = false;

    Matrix d;
    if (f.newton_direction(x, g, d)) {
      const double slope = f.inner(g, d);
      if (slope > 0.0) {
        double s = 1.0;
        for (Eigen::Index a : f.active())
          for (Eigen::Index i = 0; i < x.rows(); ++i)
            if (d(i, a) < 0.0) s = std::min(s, kBoundaryFraction * x(i, a) / -d(i, a));
        for (int bt = 0; bt < kMaxBacktracks && s > 0.0; ++bt, s *= 0.5) {
          next = x + s * d;
          for (Eigen::Index a : f.active())
            for (Eigen::Index i = 0; i < x.rows(); ++i) next(i, a) = std::max(next(i, a), 0.5 * x(i, a));
          normalize_rows(next);
          next_value = f.value(next);
          if (next_value >= value + kArmijo * s * slope) {
            stepped = true;
            break;
          }
        }
      }
    }

    if (!stepped) {
      for (int bt = 0; bt < kMaxBacktracks; ++bt, eta *= 0.5) {
        next = Matrix::Zero(x.rows(), x.cols());
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
          double top = -std::numeric_limits<double>::infinity();
          for (Eigen::Index a : f.active()) top = std::max(top, g(i, a));
          for (Eigen::Index a : f.active()) next(i, a) = x(i, a) * std::exp(eta * (g(i, a) - top));
        }
        normalize_rows(next);
        next_value = f.value(next);
        const double predicted = f.inner(g, next - x);
        if (next_value >= value + kArmijo * predicted && next_value > value) {
          stepped = true;
          eta = std::min(eta * 2.0, 1e6);
          break;
        }
      }
      if (!stepped) eta = 1.0;
    }

    if (!stepped) {
      // No ascent possible at working precision.
      if (stationary) {
        improvement = 0.0;
        continue;
      }
      break;
    }

    improvement = next_value - value;
    x = std::move(next);
    value = next_value;

    bool dropped = false;
    for (Eigen::Index a = 0; a < f.actions(); ++a) {
      if (f.is_active(a) && f.active().size() > 1 && x.col(a).maxCoeff() <= kSupportThreshold) {
        x.col(a).setZero();
        f.deactivate(a);
        dropped = true;
      }
    }
    if (dropped) {
      normalize_rows(x);
      value = f.value(x);
      improvement = std::numeric_limits<double>::infinity();
    }
  }

  result.rule.probs = x;
  result.iterations = iter;
  result.support.assign(problem.num_actions(), false);
  for (Eigen::Index a : f.active()) result.support[a] = true;
  result.expected_utility = expected_utility(problem, result.rule);
  result.cost = choice_rule_cost(result.rule, beta);
  result.objective = result.expected_utility - result.cost;
  result.foc_residual = f.residual(f.gradient(x));
  if (result.converged && result.foc_residual > opts.tolerance) result.converged = false;
  return result;
}

}  // namespace infocost
