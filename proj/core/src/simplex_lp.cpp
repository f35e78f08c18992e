#include "infocost/simplex_lp.hpp"

#include <cmath>
#include <limits>

#include "infocost/error.hpp"

namespace infocost::lp {

namespace {

// Tableau layout: rows 0..m-1 are constraints, row m holds reduced costs.
// The last column is the right-hand side.
class Tableau {
 public:
  Tableau(Matrix t, std::vector<Eigen::Index> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index rhs() const { return t_.cols() - 1; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    t_.row(r) /= t_(r, c);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[r] = c;
  }

  // Runs Bland's rule over columns [0, allowed).
  Status optimize(Eigen::Index allowed, const Options& opts, int& iterations) {
    const Eigen::Index m = rows();
    while (true) {
      if (iterations >= opts.max_iterations) return Status::IterationLimit;
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed; ++j)
        if (t_(m, j) < -opts.pivot_tolerance) {
          enter = j;
          break;
        }
      if (enter < 0) return Status::Optimal;

      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m; ++i) {
        const double a = t_(i, enter);
        if (a <= opts.pivot_tolerance) continue;
        const double ratio = t_(i, rhs()) / a;
        if (ratio < best - 1e-14 ||
            (std::abs(ratio - best) <= 1e-14 && leave >= 0 && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
      ++iterations;
    }
  }

  Matrix& data() { return t_; }
  std::vector<Eigen::Index>& basis() { return basis_; }

 private:
  Matrix t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

Result minimize(const Vector& c, const Matrix& A, const Vector& b, const Options& opts) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (c.size() != n || b.size() != m)
    fail(ErrorCode::DimensionMismatch, "LP dimensions are inconsistent");

  // Phase 1: one artificial per row, minimize their sum.
  Matrix t = Matrix::Zero(m + 1, n + m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double sign = b(i) < 0.0 ? -1.0 : 1.0;
    t.row(i).head(n) = sign * A.row(i);
    t(i, n + i) = 1.0;
    t(i, n + m) = sign * b(i);
  }
  for (Eigen::Index i = 0; i < m; ++i) t.row(m) -= t.row(i);
  for (Eigen::Index i = 0; i < m; ++i) t(m, n + i) = 0.0;

  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;
  Tableau tab(std::move(t), std::move(basis));

  Result result;
  Status s = tab.optimize(n + m, opts, result.iterations);
  if (s == Status::IterationLimit) {
    result.status = s;
    return result;
  }
  const double infeasibility = -tab.data()(m, n + m);
  if (infeasibility > opts.feasibility_tolerance) {
    result.status = Status::Infeasible;
    result.objective = infeasibility;
    return result;
  }

  // Drive remaining artificials out of the basis; rows where that is
  // impossible are redundant and are dropped.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basis()[i] < n) {
      keep.push_back(i);
      continue;
    }
    Eigen::Index col = -1;
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(tab.data()(i, j)) > opts.pivot_tolerance) {
        col = j;
        break;
      }
    if (col >= 0) {
      tab.pivot(i, col);
      keep.push_back(i);
    }
  }

  // Phase 2 tableau over the original columns.
  const auto m2 = static_cast<Eigen::Index>(keep.size());
  Matrix t2 = Matrix::Zero(m2 + 1, n + 1);
  std::vector<Eigen::Index> basis2(m2);
  for (Eigen::Index k = 0; k < m2; ++k) {
    t2.row(k).head(n) = tab.data().row(keep[k]).head(n);
    t2(k, n) = tab.data()(keep[k], n + m);
    basis2[k] = tab.basis()[keep[k]];
  }
  t2.row(m2).head(n) = c.transpose();
  for (Eigen::Index k = 0; k < m2; ++k) {
    const double cb = c(basis2[k]);
    if (cb != 0.0) t2.row(m2) -= cb * t2.row(k);
  }
  Tableau phase2(std::move(t2), std::move(basis2));
  s = phase2.optimize(n, opts, result.iterations);
  result.status = s;

  result.x = Vector::Zero(n);
  for (Eigen::Index k = 0; k < m2; ++k) result.x(phase2.basis()[k]) = phase2.data()(k, n);
  result.objective = c.dot(result.x);
  return result;
}

}  // namespace infocost::lp
