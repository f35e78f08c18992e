#pragma once

#include <cmath>
#include <vector>

namespace infocost::detail {

/// Exact floating-point accumulator (Shewchuk's non-overlapping partials,
/// as in Python's math.fsum). `value()` is the correctly rounded sum, so two
/// accumulators fed the same multiset of terms in any order agree bitwise.
class ExactSum {
 public:
  void add(double x) {
    std::size_t i = 0;
    for (double y : partials_) {
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials_[i++] = lo;
      x = hi;
    }
    partials_.resize(i);
    if (x != 0.0) partials_.push_back(x);
  }

  /// Adds count * x without rounding the product.
  void add_scaled(double x, double count) {
    const double p = x * count;
    add(p);
    add(std::fma(x, count, -p));
  }

  double value() const {
    if (partials_.empty()) return 0.0;
    auto n = partials_.size();
    double hi = partials_[--n];
    double lo = 0.0;
    while (n > 0) {
      const double x = hi;
      const double y = partials_[--n];
      hi = x + y;
      const double yr = hi - x;
      lo = y - yr;
      if (lo != 0.0) break;
    }
    // Round-half-even correction when the remaining partials push past a tie.
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
      const double y = lo * 2.0;
      const double x = hi + y;
      if (y == x - hi) hi = x;
    }
    return hi;
  }

 private:
  std::vector<double> partials_;
};

}  // namespace infocost::detail
