#include "infocost/random.hpp"

#include <cmath>
#include <string>

namespace infocost {

namespace {

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::string> labels(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::index(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n));
}

int Rng::integer(int lo, int hi) {
  return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1)));
}

Distribution random_row(Rng& rng, std::size_t k) {
  constexpr double kMix = 1e-3;
  Distribution row(k);
  double sum = 0.0;
  for (auto& x : row) {
    x = -std::log1p(-rng.uniform());
    sum += x;
  }
  for (auto& x : row) x = (1.0 - kMix) * x / sum + kMix / static_cast<double>(k);
  return row;
}

Experiment random_experiment(Rng& rng, const StateSpace& states, std::size_t num_signals) {
  Matrix probs(static_cast<Eigen::Index>(states.size()), static_cast<Eigen::Index>(num_signals));
  for (Eigen::Index i = 0; i < probs.rows(); ++i) {
    const Distribution row = random_row(rng, num_signals);
    for (Eigen::Index s = 0; s < probs.cols(); ++s) probs(i, s) = row[s];
  }
  return make_normalized_experiment(states, labels("s", num_signals), std::move(probs));
}

BetaMatrix random_beta(Rng& rng, const StateSpace& states, double lo, double hi) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Matrix coef = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) coef(i, j) = rng.uniform(lo, hi);
  return BetaMatrix(states, std::move(coef));
}

GarblingMatrix random_garbling(Rng& rng, std::size_t from, std::size_t to) {
  GarblingMatrix g;
  g.probs.resize(static_cast<Eigen::Index>(from), static_cast<Eigen::Index>(to));
  for (Eigen::Index s = 0; s < g.probs.rows(); ++s) {
    const Distribution row = random_row(rng, to);
    for (Eigen::Index t = 0; t < g.probs.cols(); ++t) g.probs(s, t) = row[t];
    g.probs.row(s) /= g.probs.row(s).sum();
  }
  g.targets = labels("g", to);
  return g;
}

DecisionProblem random_problem(Rng& rng, std::size_t num_states, std::size_t num_actions) {
  DecisionProblem p{StateSpace::indexed(num_states), labels("a", num_actions),
                    Matrix(static_cast<Eigen::Index>(num_actions),
                           static_cast<Eigen::Index>(num_states)),
                    random_row(rng, num_states)};
  for (Eigen::Index a = 0; a < p.utility.rows(); ++a)
    for (Eigen::Index i = 0; i < p.utility.cols(); ++i) p.utility(a, i) = rng.uniform(-1.0, 1.0);
  double sum = 0.0;
  for (double q : p.prior) sum += q;
  for (double& q : p.prior) q /= sum;
  return p;
}

FiniteDistribution random_distribution(Rng& rng, int dim, std::size_t size) {
  std::vector<std::vector<double>> atoms(size, std::vector<double>(static_cast<std::size_t>(dim)));
  for (auto& a : atoms)
    for (auto& x : a) x = rng.uniform(-1.0, 1.0);
  Distribution w = random_row(rng, size);
  double sum = 0.0;
  for (double x : w) sum += x;
  for (double& x : w) x /= sum;
  return FiniteDistribution(std::move(atoms), std::move(w));
}

}  // namespace infocost
