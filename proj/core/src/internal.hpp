#pragma once

#include <cmath>
#include <span>

namespace infocost::detail {

/// KL divergence without validation; callers guarantee positive rows.
inline double kl_unchecked(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t s = 0; s < p.size(); ++s) sum += p[s] * std::log(p[s] / q[s]);
  return sum;
}

inline double entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

}  // namespace infocost::detail
