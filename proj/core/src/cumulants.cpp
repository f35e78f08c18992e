#include "infocost/cumulants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "infocost/error.hpp"

namespace infocost {

namespace {

constexpr double kAtomMergeTolerance = 1e-12;

void check_box(int dim, int max_order) {
  if (max_order < 1) fail(ErrorCode::InvalidArgument, "order bound must be at least 1");
  if (dim > kMaxCumulantDim || max_order > kMaxCumulantOrder)
    fail(ErrorCode::DimensionTooLarge, "moments are supported for n <= 4 and N <= 4");
}

bool close(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t d = 0; d < a.size(); ++d)
    if (std::abs(a[d] - b[d]) > kAtomMergeTolerance) return false;
  return true;
}

// For each beta in the box: the proper non-zero sub-indices lambda < beta,
// with the position of beta - lambda and the exact binomial weight.
struct Split {
  std::size_t part;
  std::size_t rest;
  double weight;
};

std::vector<std::vector<Split>> proper_splits(const IndexBox& box) {
  std::vector<std::vector<Split>> splits(box.size());
  for (std::size_t pb = 1; pb < box.size(); ++pb) {
    const MultiIndex beta = box.at(pb);
    for (std::size_t pl = 1; pl < box.size(); ++pl) {
      const MultiIndex lambda = box.at(pl);
      if (pl == pb || !lambda.leq(beta)) continue;
      splits[pb].push_back({pl, box.position(beta - lambda),
                            static_cast<double>(binomial(beta, lambda))});
    }
  }
  return splits;
}

// Evaluates sum over ordered compositions (lambda^1..lambda^q) of alpha of
//   coefficient(q) * alpha!/(prod lambda^p!) * prod input(lambda^p)
// for every alpha, grouping compositions by their first part:
//   S_1(b) = input(b),  S_q(b) = sum_{0 < l < b} binom(b, l) input(l) S_{q-1}(b - l),
// and S_q(b) is exactly the sum over q-part compositions of b.
template <class Out, class In>
Out transform(const In& input, const std::function<double(int)>& coefficient) {
  const IndexBox& box = input.box();
  const auto splits = proper_splits(box);
  const int max_parts = box.dim() * box.bound();

  std::vector<double> prev(box.size(), 0.0);
  for (std::size_t p = 1; p < box.size(); ++p) prev[p] = input.at_position(p);

  std::vector<double> total(box.size(), 0.0);
  for (std::size_t p = 1; p < box.size(); ++p) total[p] = coefficient(1) * prev[p];

  for (int q = 2; q <= max_parts; ++q) {
    std::vector<double> cur(box.size(), 0.0);
    for (std::size_t p = 1; p < box.size(); ++p) {
      double s = 0.0;
      for (const Split& sp : splits[p]) s += sp.weight * input.at_position(sp.part) * prev[sp.rest];
      cur[p] = s;
      total[p] += coefficient(q) * s;
    }
    prev = std::move(cur);
  }

  Out out(box);
  for (std::size_t p = 1; p < box.size(); ++p) out.at_position(p) = total[p];
  return out;
}

struct Term {
  std::size_t lambda;
  std::size_t rest;  // alpha - lambda; 0 when lambda == alpha
  double weight;     // binom(alpha - e_d, lambda - e_d)
};

// Terms of the derivative recursion for every alpha, d = first non-zero axis.
std::vector<std::vector<Term>> recursion_terms(const IndexBox& box) {
  std::vector<std::vector<Term>> terms(box.size());
  for (std::size_t pa = 1; pa < box.size(); ++pa) {
    const MultiIndex alpha = box.at(pa);
    int d = 0;
    while (alpha[d] == 0) ++d;
    const MultiIndex e = MultiIndex::unit(alpha.dim(), d);
    for (std::size_t pl = 1; pl <= pa; ++pl) {
      const MultiIndex lambda = box.at(pl);
      if (lambda[d] == 0 || !lambda.leq(alpha)) continue;
      terms[pa].push_back({pl, box.position(alpha - lambda),
                           static_cast<double>(binomial(alpha - e, lambda - e))});
    }
  }
  return terms;
}

// Positions are mixed-radix, so lambda <= alpha implies position(lambda) <=
// position(alpha) and a single increasing sweep sees every input it needs.
CumulantVector recursive_to_cumulants(const MomentVector& m) {
  const IndexBox& box = m.box();
  const auto terms = recursion_terms(box);
  CumulantVector k(box);
  for (std::size_t pa = 1; pa < box.size(); ++pa) {
    double s = m.at_position(pa);
    for (const Term& t : terms[pa])
      if (t.rest != 0) s -= t.weight * k.at_position(t.lambda) * m.at_position(t.rest);
    k.at_position(pa) = s;
  }
  return k;
}

MomentVector recursive_to_moments(const CumulantVector& k) {
  const IndexBox& box = k.box();
  const auto terms = recursion_terms(box);
  MomentVector m(box);
  for (std::size_t pa = 1; pa < box.size(); ++pa) {
    double s = 0.0;
    for (const Term& t : terms[pa])
      s += t.weight * k.at_position(t.lambda) * (t.rest == 0 ? 1.0 : m.at_position(t.rest));
    m.at_position(pa) = s;
  }
  return m;
}

std::vector<MultiIndex> nonzero_below(const MultiIndex& alpha) {
  // All 0 < lambda <= alpha, in decreasing lexicographic order.
  std::vector<MultiIndex> out;
  MultiIndex cur = alpha;
  std::function<void(int)> rec = [&](int d) {
    if (d == alpha.dim()) {
      if (!cur.is_zero()) out.push_back(cur);
      return;
    }
    for (int v = alpha[d]; v >= 0; --v) {
      cur[d] = v;
      rec(d + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<std::vector<double>> atoms,
                                       std::vector<double> weights) {
  if (atoms.empty() || atoms.size() != weights.size())
    fail(ErrorCode::DimensionMismatch, "one weight per atom is required");
  const std::size_t dim = atoms.front().size();
  if (dim == 0) fail(ErrorCode::DimensionMismatch, "atoms must have positive dimension");
  double sum = 0.0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (atoms[k].size() != dim) fail(ErrorCode::DimensionMismatch, "atoms differ in dimension");
    if (!(weights[k] >= 0.0)) fail(ErrorCode::InvalidArgument, "weights must be non-negative");
    sum += weights[k];
    auto it = std::find_if(atoms_.begin(), atoms_.end(),
                           [&](const auto& a) { return close(a, atoms[k]); });
    if (it == atoms_.end()) {
      atoms_.push_back(std::move(atoms[k]));
      weights_.push_back(weights[k]);
    } else {
      weights_[static_cast<std::size_t>(it - atoms_.begin())] += weights[k];
    }
  }
  if (std::abs(sum - 1.0) > kRowSumTolerance)
    fail(ErrorCode::RowSumViolation, "weights must sum to 1");
}

FiniteDistribution FiniteDistribution::point_mass(std::vector<double> x) {
  return FiniteDistribution({std::move(x)}, {1.0});
}

MomentVector moments(const FiniteDistribution& dist, int max_order) {
  check_box(dist.dim(), max_order);
  const IndexBox box(dist.dim(), max_order);
  MomentVector m(box);
  for (std::size_t p = 1; p < box.size(); ++p) {
    const MultiIndex alpha = box.at(p);
    double s = 0.0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
      double term = dist.weights()[k];
      for (int d = 0; d < alpha.dim(); ++d) term *= std::pow(dist.atoms()[k][d], alpha[d]);
      s += term;
    }
    m.at_position(p) = s;
  }
  return m;
}

std::vector<std::vector<MultiIndex>> enumerate_lambda(const MultiIndex& alpha) {
  if (alpha.is_zero()) fail(ErrorCode::InvalidArgument, "alpha must be non-zero");
  std::map<MultiIndex, std::vector<std::vector<MultiIndex>>> memo;
  std::function<const std::vector<std::vector<MultiIndex>>&(const MultiIndex&)> rec =
      [&](const MultiIndex& a) -> const std::vector<std::vector<MultiIndex>>& {
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    std::vector<std::vector<MultiIndex>> result;
    for (const MultiIndex& first : nonzero_below(a)) {
      if (first == a) {
        result.push_back({first});
        continue;
      }
      for (const auto& tail : rec(a - first)) {
        std::vector<MultiIndex> c;
        c.reserve(tail.size() + 1);
        c.push_back(first);
        c.insert(c.end(), tail.begin(), tail.end());
        result.push_back(std::move(c));
      }
    }
    return memo.emplace(a, std::move(result)).first->second;
  };
  return rec(alpha);
}

std::uint64_t count_lambda(const MultiIndex& alpha) {
  if (alpha.is_zero()) fail(ErrorCode::InvalidArgument, "alpha must be non-zero");
  std::map<MultiIndex, std::uint64_t> memo;
  std::function<std::uint64_t(const MultiIndex&)> rec = [&](const MultiIndex& a) -> std::uint64_t {
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    std::uint64_t c = 0;
    for (const MultiIndex& first : nonzero_below(a)) c += (first == a) ? 1 : rec(a - first);
    memo.emplace(a, c);
    return c;
  };
  return rec(alpha);
}

CumulantVector moments_to_cumulants(const MomentVector& m, Conversion method) {
  if (method == Conversion::Recursive) return recursive_to_cumulants(m);
  return transform<CumulantVector>(m, [](int q) {
    return ((q % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(q);
  });
}

MomentVector cumulants_to_moments(const CumulantVector& k, Conversion method) {
  if (method == Conversion::Recursive) return recursive_to_moments(k);
  return transform<MomentVector>(k, [](int q) {
    double f = 1.0;
    for (int j = 2; j <= q; ++j) f *= j;
    return 1.0 / f;
  });
}

// Cumulants above the first are shift-invariant, so they are computed from
// the centred law, whose moments carry no mean-dominated cancellation.
CumulantVector cumulants(const FiniteDistribution& dist, int max_order) {
  check_box(dist.dim(), max_order);
  std::vector<double> mean(static_cast<std::size_t>(dist.dim()), 0.0);
  for (std::size_t k = 0; k < dist.size(); ++k)
    for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += dist.weights()[k] * dist.atoms()[k][d];
  auto atoms = dist.atoms();
  for (auto& a : atoms)
    for (std::size_t d = 0; d < mean.size(); ++d) a[d] -= mean[d];
  CumulantVector k = moments_to_cumulants(moments(FiniteDistribution(atoms, dist.weights()), max_order));
  for (int d = 0; d < dist.dim(); ++d) k[MultiIndex::unit(dist.dim(), d)] = mean[static_cast<std::size_t>(d)];
  return k;
}

FiniteDistribution convolve(const FiniteDistribution& a, const FiniteDistribution& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "convolution needs equal dimensions");
  std::vector<std::vector<double>> atoms;
  std::vector<double> weights;
  atoms.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::vector<double> x(a.atoms()[i]);
      for (std::size_t d = 0; d < x.size(); ++d) x[d] += b.atoms()[j][d];
      atoms.push_back(std::move(x));
      weights.push_back(a.weights()[i] * b.weights()[j]);
    }
  return FiniteDistribution(std::move(atoms), std::move(weights));
}

FiniteDistribution state_distribution(const LLRDistribution& sigma, std::size_t state) {
  std::vector<double> w(sigma.atoms.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    w[k] = sigma.weights(static_cast<Eigen::Index>(state), static_cast<Eigen::Index>(k));
  return FiniteDistribution(sigma.atoms, std::move(w));
}

}  // namespace infocost
