#include "infocost/dominance.hpp"

#include "infocost/error.hpp"
#include "infocost/simplex_lp.hpp"

namespace infocost {

GarblingFit fit_garbling(const Experiment& mu, const Experiment& nu) {
  if (!(mu.states() == nu.states()))
    fail(ErrorCode::StateSpaceMismatch, "experiments are defined on different state spaces");

  const auto n = static_cast<Eigen::Index>(mu.num_states());
  const auto src = static_cast<Eigen::Index>(mu.num_signals());
  const auto dst = static_cast<Eigen::Index>(nu.num_signals());

  // Columns: g (src*dst, row-major), t, then one slack per inequality.
  const Eigen::Index g_vars = src * dst;
  const Eigen::Index t_col = g_vars;
  const Eigen::Index pairs = n * dst;
  const Eigen::Index cols = g_vars + 1 + 2 * pairs;
  const Eigen::Index rows = src + 2 * pairs;

  Matrix A = Matrix::Zero(rows, cols);
  Vector b = Vector::Zero(rows);
  Vector c = Vector::Zero(cols);
  c(t_col) = 1.0;

  for (Eigen::Index s = 0; s < src; ++s) {
    A.row(s).segment(s * dst, dst).setOnes();
    b(s) = 1.0;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index t = 0; t < dst; ++t) {
      const Eigen::Index k = i * dst + t;
      const Eigen::Index upper = src + 2 * k;
      const Eigen::Index lower = upper + 1;
      for (Eigen::Index s = 0; s < src; ++s) {
        A(upper, s * dst + t) = mu.probs()(i, s);
        A(lower, s * dst + t) = -mu.probs()(i, s);
      }
      A(upper, t_col) = -1.0;
      A(lower, t_col) = -1.0;
      A(upper, g_vars + 1 + 2 * k) = 1.0;
      A(lower, g_vars + 2 + 2 * k) = 1.0;
      b(upper) = nu.probs()(i, t);
      b(lower) = -nu.probs()(i, t);
    }
  }

  const lp::Result r = lp::minimize(c, A, b);
  if (r.status != lp::Status::Optimal)
    fail(ErrorCode::SolverFailure, "garbling LP did not reach an optimal basis");

  GarblingFit fit;
  fit.garbling.probs.resize(src, dst);
  for (Eigen::Index s = 0; s < src; ++s)
    for (Eigen::Index t = 0; t < dst; ++t) fit.garbling.probs(s, t) = r.x(s * dst + t);
  fit.garbling.targets = nu.signals();
  fit.residual = r.x(t_col);
  return fit;
}

bool blackwell_dominates(const Experiment& mu, const Experiment& nu, double tol) {
  return fit_garbling(mu, nu).residual <= tol;
}

}  // namespace infocost
