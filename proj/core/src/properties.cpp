#include "infocost/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "infocost/costs.hpp"
#include "infocost/cumulants.hpp"
#include "infocost/llr_distribution.hpp"
#include "infocost/random.hpp"

namespace infocost {

namespace {

// |a - b| scaled by max(1, |a|, |b|).
double rel_gap(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Runs `trial` opts.trials times; each call returns the deviation observed.
// Every property draws from its own stream so suites can be reordered.
PropertyResult run(const char* suite, const char* name, double tolerance, const CheckOptions& opts,
                   std::uint64_t stream, const std::function<double(Rng&)>& trial) {
  Rng rng(opts.seed * 0x9e3779b97f4a7c15ULL + stream);
  PropertyResult r{suite, name, opts.trials, 0.0, tolerance, true};
  for (int t = 0; t < opts.trials; ++t) {
    const double dev = trial(rng);
    if (!(dev <= r.max_deviation)) r.max_deviation = dev;  // keeps NaN
  }
  r.passed = r.max_deviation <= tolerance;
  return r;
}

StateSpace random_states(Rng& rng, int lo = 2, int hi = 5) {
  return StateSpace::indexed(static_cast<std::size_t>(rng.integer(lo, hi)));
}

std::size_t random_signals(Rng& rng) { return static_cast<std::size_t>(rng.integer(2, 6)); }

Experiment random_exp(Rng& rng, const StateSpace& states) {
  return random_experiment(rng, states, random_signals(rng));
}

// Splits signal `col` into two copies carrying fractions t and 1 - t.
Experiment split_column(const Experiment& mu, std::size_t col, double t) {
  const auto n = static_cast<Eigen::Index>(mu.num_states());
  const auto m = static_cast<Eigen::Index>(mu.num_signals());
  const auto c = static_cast<Eigen::Index>(col);
  Matrix probs(n, m + 1);
  probs.leftCols(m) = mu.probs();
  probs.col(m) = (1.0 - t) * mu.probs().col(c);
  probs.col(c) *= t;
  auto signals = mu.signals();
  signals.push_back(signals[col] + "'");
  return make_experiment(mu.states(), std::move(signals), std::move(probs));
}

BetaMatrix corrupted_beta(const StateSpace& states) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Matrix coef = Matrix::Zero(n, n);
  coef(0, 1) = -1.0;
  return BetaMatrix::unvalidated(states, std::move(coef));
}

double max_rel_gap(const IndexBox& box, const std::function<double(std::size_t)>& a,
                   const std::function<double(std::size_t)>& b) {
  double worst = 0.0;
  for (std::size_t p = 1; p < box.size(); ++p) worst = std::max(worst, rel_gap(a(p), b(p)));
  return worst;
}

}  // namespace

std::vector<PropertyResult> run_axiom_suite(const CheckOptions& opts) {
  constexpr const char* kSuite = "axioms";
  std::vector<PropertyResult> out;

  out.push_back(run(kSuite, "kl_nonnegativity", 1e-12, opts, 1, [](Rng& rng) {
    const std::size_t k = random_signals(rng);
    const Distribution p = random_row(rng, k);
    const Distribution q = random_row(rng, k);
    const double kl = kl_divergence(p, q);
    double dev = std::max(0.0, -kl) + kl_divergence(p, p);
    if (p != q && !(kl > 0.0)) dev = std::max(dev, 1.0);
    return dev;
  }));

  out.push_back(run(kSuite, "kl_product_additivity", 1e-10, opts, 2, [](Rng& rng) {
    const StateSpace states = random_states(rng);
    const Experiment a = random_exp(rng, states);
    const Experiment b = random_exp(rng, states);
    const Experiment ab = product(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = 0; j < states.size(); ++j) {
        const double lhs = kl_divergence(ab.row(i), ab.row(j));
        const double rhs = kl_divergence(a.row(i), a.row(j)) + kl_divergence(b.row(i), b.row(j));
        worst = std::max(worst, rel_gap(lhs, rhs));
      }
    return worst;
  }));

  out.push_back(run(kSuite, "kl_convexity", 1e-12, opts, 3, [](Rng& rng) {
    const std::size_t k = random_signals(rng);
    const Distribution p1 = random_row(rng, k), q1 = random_row(rng, k);
    const Distribution p2 = random_row(rng, k), q2 = random_row(rng, k);
    const double a = rng.uniform();
    Distribution p(k), q(k);
    for (std::size_t s = 0; s < k; ++s) {
      p[s] = a * p1[s] + (1 - a) * p2[s];
      q[s] = a * q1[s] + (1 - a) * q2[s];
    }
    const double lhs = kl_divergence(p, q);
    const double rhs = a * kl_divergence(p1, q1) + (1 - a) * kl_divergence(p2, q2);
    return std::max(0.0, lhs - rhs);
  }));

  out.push_back(run(kSuite, "kl_data_processing", 1e-12, opts, 4, [](Rng& rng) {
    const StateSpace states = StateSpace::indexed(2);
    const Experiment mu = random_exp(rng, states);
    const GarblingMatrix g = random_garbling(rng, mu.num_signals(), random_signals(rng));
    const Experiment nu = garble(mu, g);
    return std::max(0.0, kl_divergence(nu.row(0), nu.row(1)) - kl_divergence(mu.row(0), mu.row(1)));
  }));

  out.push_back(run(kSuite, "product_additivity", 1e-10, opts, 5, [](Rng& rng) {
    const StateSpace states = random_states(rng);
    const Experiment a = random_exp(rng, states);
    const Experiment b = random_exp(rng, states);
    const BetaMatrix beta = random_beta(rng, states, 0.0, 5.0);
    return rel_gap(llr_cost(product(a, b), beta), llr_cost(a, beta) + llr_cost(b, beta));
  }));

  out.push_back(run(kSuite, "dilution_linearity", 1e-10, opts, 6, [](Rng& rng) {
    const StateSpace states = random_states(rng);
    const Experiment mu = random_exp(rng, states);
    const BetaMatrix beta = random_beta(rng, states, 0.0, 5.0);
    const double alpha = rng.uniform(1e-3, 1.0);
    return rel_gap(llr_cost(dilute(mu, alpha), beta), alpha * llr_cost(mu, beta));
  }));

  out.push_back(run(kSuite, "equivalence_invariance", 1e-10, opts, 7, [](Rng& rng) {
    const StateSpace states = random_states(rng);
    const Experiment mu = random_exp(rng, states);
    const BetaMatrix beta = random_beta(rng, states, 0.0, 5.0);
    const Experiment split = split_column(mu, rng.index(mu.num_signals()), rng.uniform(0.05, 0.95));
    return rel_gap(llr_cost(split, beta), llr_cost(mu, beta));
  }));

  out.push_back(run(kSuite, "blackwell_monotonicity", 1e-9, opts, 8, [&opts](Rng& rng) {
    const StateSpace states = random_states(rng);
    const Experiment mu = random_exp(rng, states);
    const BetaMatrix beta =
        opts.inject_negative_beta ? corrupted_beta(states) : random_beta(rng, states, 0.0, 5.0);
    const GarblingMatrix g = random_garbling(rng, mu.num_signals(), random_signals(rng));
    const double before = llr_cost(mu, beta);
    const double after = llr_cost(garble(mu, g), beta);
    return std::max(0.0, after - before) / std::max(1.0, std::abs(before));
  }));

  out.push_back(run(kSuite, "bayesian_representation", 1e-9, opts, 9, [](Rng& rng) {
    const StateSpace states = random_states(rng);
    const Experiment mu = random_exp(rng, states);
    const BetaMatrix beta = random_beta(rng, states, 0.0, 5.0);
    const Distribution prior = random_row(rng, states.size());
    return rel_gap(llr_cost(mu, beta), llr_cost_via_posteriors(mu, beta, prior));
  }));

  return out;
}

std::vector<PropertyResult> run_appendix_suite(const CheckOptions& opts) {
  constexpr const char* kSuite = "appendix";
  std::vector<PropertyResult> out;

  out.push_back(run(kSuite, "llr_admissibility", 1e-8, opts, 101, [](Rng& rng) {
    const StateSpace states = random_states(rng);
    const LLRDistribution sigma = llr_distribution(random_exp(rng, states));
    double worst = 0.0;
    for (Eigen::Index i = 0; i < sigma.weights.rows(); ++i)
      worst = std::max(worst, std::abs(sigma.weights.row(i).sum() - 1.0));
    for (std::size_t k = 0; k < sigma.atoms.size(); ++k)
      for (Eigen::Index i = 1; i < sigma.weights.rows(); ++i) {
        const double w0 = sigma.weights(0, static_cast<Eigen::Index>(k));
        const double wi = sigma.weights(i, static_cast<Eigen::Index>(k));
        worst = std::max(worst, std::abs(wi - std::exp(sigma.atoms[k][i - 1]) * w0) / wi);
      }
    return worst;
  }));

  out.push_back(run(kSuite, "moment_cumulant_round_trip", 1e-10, opts, 102, [](Rng& rng) {
    const FiniteDistribution d =
        random_distribution(rng, rng.integer(1, 3), static_cast<std::size_t>(rng.integer(1, 6)));
    const MomentVector m = moments(d, kMaxCumulantOrder);
    const MomentVector back = cumulants_to_moments(moments_to_cumulants(m));
    return max_rel_gap(
        m.box(), [&](std::size_t p) { return m.at_position(p); },
        [&](std::size_t p) { return back.at_position(p); });
  }));

  out.push_back(run(kSuite, "cumulant_additivity", 1e-9, opts, 103, [](Rng& rng) {
    const int dim = rng.integer(1, 3);
    const FiniteDistribution a =
        random_distribution(rng, dim, static_cast<std::size_t>(rng.integer(1, 5)));
    const FiniteDistribution b =
        random_distribution(rng, dim, static_cast<std::size_t>(rng.integer(1, 5)));
    const CumulantVector ka = cumulants(a, kMaxCumulantOrder);
    const CumulantVector kb = cumulants(b, kMaxCumulantOrder);
    const CumulantVector kab = cumulants(convolve(a, b), kMaxCumulantOrder);
    return max_rel_gap(
        ka.box(), [&](std::size_t p) { return kab.at_position(p); },
        [&](std::size_t p) { return ka.at_position(p) + kb.at_position(p); });
  }));

  out.push_back(run(kSuite, "self_convolution_scaling", 1e-9, opts, 104, [](Rng& rng) {
    const FiniteDistribution d =
        random_distribution(rng, rng.integer(1, 2), static_cast<std::size_t>(rng.integer(1, 3)));
    const int k = rng.integer(2, 6);
    FiniteDistribution sum = d;
    for (int j = 1; j < k; ++j) sum = convolve(sum, d);
    const CumulantVector kd = cumulants(d, kMaxCumulantOrder);
    const CumulantVector ks = cumulants(sum, kMaxCumulantOrder);
    return max_rel_gap(
        kd.box(), [&](std::size_t p) { return ks.at_position(p); },
        [&](std::size_t p) { return k * kd.at_position(p); });
  }));

  out.push_back(run(kSuite, "llr_moment_consistency", 1e-10, opts, 105, [](Rng& rng) {
    const StateSpace states = random_states(rng, 2, 4);
    const Experiment mu = random_exp(rng, states);
    const LLRDistribution sigma = llr_distribution(mu);
    double worst = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const MomentVector m = moments(state_distribution(sigma, i), kMaxCumulantOrder);
      const IndexBox& box = m.box();
      for (std::size_t p = 1; p < box.size(); ++p) {
        const MultiIndex alpha = box.at(p);
        double direct = 0.0;
        for (std::size_t s = 0; s < mu.num_signals(); ++s) {
          double term = mu.row(i)[s];
          for (int d = 0; d < alpha.dim(); ++d)
            term *= std::pow(std::log(mu.row(static_cast<std::size_t>(d) + 1)[s] / mu.row(0)[s]),
                             alpha[d]);
          direct += term;
        }
        worst = std::max(worst, rel_gap(m.at_position(p), direct));
      }
    }
    return worst;
  }));

  return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace infocost
