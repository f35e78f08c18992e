#include "infocost/llr_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace infocost {

namespace {

constexpr double kMergeTolerance = 1e-12;

bool same_atom(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t d = 0; d < a.size(); ++d)
    if (std::abs(a[d] - b[d]) > tol) return false;
  return true;
}

}  // namespace

LLRDistribution llr_distribution(const Experiment& mu) {
  const std::size_t n = mu.num_states();
  const auto& p = mu.probs();

  std::vector<std::vector<double>> atoms;
  std::vector<std::vector<double>> columns;  // per atom, weight under each state
  for (std::size_t s = 0; s < mu.num_signals(); ++s) {
    std::vector<double> xi(n - 1);
    for (std::size_t i = 1; i < n; ++i) xi[i - 1] = std::log(p(i, s) / p(0, s));

    auto it = std::find_if(atoms.begin(), atoms.end(), [&](const auto& a) {
      return same_atom(a, xi, kMergeTolerance);
    });
    const auto k = static_cast<std::size_t>(it - atoms.begin());
    if (it == atoms.end()) {
      atoms.push_back(std::move(xi));
      columns.emplace_back(n, 0.0);
    }
    for (std::size_t i = 0; i < n; ++i) columns[k][i] += p(i, s);
  }

  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });

  LLRDistribution out;
  out.weights.resize(n, atoms.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.atoms.push_back(atoms[order[k]]);
    for (std::size_t i = 0; i < n; ++i) out.weights(i, k) = columns[order[k]][i];
  }
  return out;
}

bool check_admissible(const LLRDistribution& sigma, double tol) {
  for (std::size_t k = 0; k < sigma.atoms.size(); ++k) {
    const double base = sigma.weights(0, k);
    for (std::size_t i = 1; i < static_cast<std::size_t>(sigma.weights.rows()); ++i) {
      const double expected = std::exp(sigma.atoms[k][i - 1]) * base;
      if (std::abs(sigma.weights(i, k) - expected) > tol) return false;
    }
  }
  return true;
}

bool equivalent(const LLRDistribution& a, const LLRDistribution& b, double tol) {
  if (a.atoms.size() != b.atoms.size() || a.weights.rows() != b.weights.rows()) return false;
  for (std::size_t k = 0; k < a.atoms.size(); ++k)
    if (a.atoms[k].size() != b.atoms[k].size() || !same_atom(a.atoms[k], b.atoms[k], tol))
      return false;
  return ((a.weights - b.weights).cwiseAbs().maxCoeff() <= tol);
}

}  // namespace infocost
