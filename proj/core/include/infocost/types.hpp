#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace infocost {

/// Row-major so that a state's distribution is a contiguous span.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

/// A probability row over states or signals.
using Distribution = std::vector<double>;

inline std::span<const double> row_span(const Matrix& m, Eigen::Index r) {
  return {m.data() + r * m.cols(), static_cast<std::size_t>(m.cols())};
}

/// Entries at or below this value are treated as zero probability.
inline constexpr double kPositivityFloor = 1e-12;
/// Admissible deviation of a probability row sum from one.
inline constexpr double kRowSumTolerance = 1e-9;

}  // namespace infocost
