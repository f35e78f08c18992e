#pragma once

#include <map>
#include <vector>

#include "infocost/error.hpp"
#include "infocost/llr_distribution.hpp"
#include "infocost/multi_index.hpp"

namespace infocost {

/// Largest supported dimension n and order bound N.
inline constexpr int kMaxCumulantDim = 4;
inline constexpr int kMaxCumulantOrder = 4;

/// Probability distribution on R^n with finitely many distinct atoms.
class FiniteDistribution {
 public:
  /// Atoms closer than 1e-12 componentwise are merged. Throws
  /// DimensionMismatch, InvalidArgument (negative weight) or RowSumViolation.
  FiniteDistribution(std::vector<std::vector<double>> atoms, std::vector<double> weights);

  static FiniteDistribution point_mass(std::vector<double> x);

  int dim() const noexcept { return static_cast<int>(atoms_.front().size()); }
  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<std::vector<double>>& atoms() const noexcept { return atoms_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<std::vector<double>> atoms_;
  std::vector<double> weights_;
};

/// Dense table of reals indexed by the non-zero multi-indices of a box.
template <class Tag>
class IndexedValues {
 public:
  explicit IndexedValues(IndexBox box) : box_(box), values_(box.size(), 0.0) {}

  /// Builds from a sparse map; throws IncompleteInput if any non-zero index
  /// of the box is missing.
  static IndexedValues from_map(IndexBox box, const std::map<MultiIndex, double>& values);

  const IndexBox& box() const noexcept { return box_; }
  double operator[](const MultiIndex& alpha) const { return values_[box_.position(alpha)]; }
  double& operator[](const MultiIndex& alpha) { return values_[box_.position(alpha)]; }
  double at_position(std::size_t p) const { return values_[p]; }
  double& at_position(std::size_t p) { return values_[p]; }

 private:
  IndexBox box_;
  std::vector<double> values_;  // position 0 (the zero index) is unused
};

struct MomentTag {};
struct CumulantTag {};
using MomentVector = IndexedValues<MomentTag>;
using CumulantVector = IndexedValues<CumulantTag>;

/// Mixed moments m(alpha) = sum_k w_k x_k^alpha for all alpha in {0..N}^n \ {0}.
/// Throws DimensionTooLarge when n or N exceed 4, InvalidArgument if N < 1.
MomentVector moments(const FiniteDistribution& dist, int max_order);

/// Ordered collections (lambda^1, ..., lambda^q) of non-zero indices summing
/// to alpha. The first part runs through candidates in decreasing
/// lexicographic order, recursively, so e.g. (2) yields ((2)), ((1),(1)).
std::vector<std::vector<MultiIndex>> enumerate_lambda(const MultiIndex& alpha);

/// |Lambda(alpha)| without enumerating.
std::uint64_t count_lambda(const MultiIndex& alpha);

enum class Conversion {
  /// Differentiating M = exp(K) along the first non-zero axis d of alpha:
  ///   m(alpha) = sum_{0 < lambda <= alpha, lambda_d > 0}
  ///              binom(alpha - e_d, lambda - e_d) kappa(lambda) m(alpha - lambda)
  /// with m(0) = 1. Equal to the composition sums below but without their
  /// alternating cancellation.
  Recursive,
  /// The sums over Lambda(alpha), grouped by the first part of each
  /// composition.
  Compositions,
};

/// kappa(alpha) = sum over Lambda(alpha) of
///   (-1)^(q-1)/q * alpha!/(lambda^1!...lambda^q!) * prod m(lambda^p).
CumulantVector moments_to_cumulants(const MomentVector& m,
                                    Conversion method = Conversion::Recursive);

/// m(alpha) = sum over Lambda(alpha) of
///   1/q! * alpha!/(lambda^1!...lambda^q!) * prod kappa(lambda^p).
MomentVector cumulants_to_moments(const CumulantVector& k,
                                  Conversion method = Conversion::Recursive);

CumulantVector cumulants(const FiniteDistribution& dist, int max_order);

/// Law of X + Y for independent X ~ a, Y ~ b. Throws DimensionMismatch.
FiniteDistribution convolve(const FiniteDistribution& a, const FiniteDistribution& b);

/// Row `state` of an LLR distribution as a distribution on R^(|states|-1).
FiniteDistribution state_distribution(const LLRDistribution& sigma, std::size_t state);

template <class Tag>
IndexedValues<Tag> IndexedValues<Tag>::from_map(IndexBox box,
                                                const std::map<MultiIndex, double>& values) {
  IndexedValues out(box);
  for (std::size_t p = 1; p < box.size(); ++p) {
    auto it = values.find(box.at(p));
    if (it == values.end()) fail(ErrorCode::IncompleteInput, "missing entry for a multi-index");
    out.values_[p] = it->second;
  }
  return out;
}

}  // namespace infocost
