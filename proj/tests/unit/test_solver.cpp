#include <cmath>

#include "infocost/costs.hpp"
#include "infocost/diagnostics.hpp"
#include "infocost/random.hpp"
#include "infocost/solver.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace infocost {
namespace {

DecisionProblem matching(std::size_t n, Distribution prior) {
  DecisionProblem p{StateSpace::indexed(n), {}, Matrix::Identity(n, n), std::move(prior)};
  for (std::size_t a = 0; a < n; ++a) p.actions.push_back("a" + std::to_string(a));
  return p;
}

ChoiceRule random_rule(Rng& rng, std::size_t n, std::size_t m) {
  ChoiceRule r{Matrix(n, m)};
  for (std::size_t i = 0; i < n; ++i) {
    const Distribution row = random_row(rng, m);
    for (std::size_t a = 0; a < m; ++a) r.probs(i, a) = row[a];
  }
  return r;
}

TEST(DecisionProblem, Validation) {
  DecisionProblem p = matching(2, {0.5, 0.5});
  EXPECT_NO_THROW(validate(p));
  p.prior = {1.0, 0.0};
  EXPECT_ERROR_CODE(validate(p), PriorNotFullSupport);
  p.prior = {0.5, 0.5};
  p.utility = Matrix::Zero(3, 2);
  EXPECT_ERROR_CODE(validate(p), DimensionMismatch);
}

TEST(SolveLlr, SymmetricMatchingMatchesBisectionOracle) {
  const DecisionProblem p = matching(2, {0.5, 0.5});
  const BetaMatrix beta = BetaMatrix::constant(p.states, 0.1);
  const SolveResult r = solve_llr(p, beta);
  ASSERT_TRUE(r.converged);
  const double x = oracle::matching_accuracy(0.1);
  EXPECT_NEAR(x, 0.755, 1e-3);
  EXPECT_NEAR(r.rule.probs(0, 0), x, 1e-6);
  EXPECT_NEAR(r.rule.probs(1, 1), x, 1e-6);
  EXPECT_LE(r.foc_residual, 1e-8);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(SolveLlr, RandomProblemsSatisfyFocAndBeatRandomRules) {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 5));
    const std::size_t m = static_cast<std::size_t>(rng.integer(2, 4));
    const DecisionProblem p = random_problem(rng, n, m);
    const BetaMatrix beta = random_beta(rng, p.states, 0.05, 5.0);
    const SolveResult r = solve_llr(p, beta);
    ASSERT_TRUE(r.converged) << "trial " << t;
    EXPECT_LE(foc_residual(p, beta, r.rule), 1e-6);
    EXPECT_NEAR(r.objective, objective(p, r.rule, beta), 1e-12);
    for (int k = 0; k < 100; ++k)
      EXPECT_GE(r.objective, objective(p, random_rule(rng, n, m), beta) - 1e-7);
  }
}

TEST(SolveLlr, TwoStatesMatchGridSearch) {
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const DecisionProblem p = random_problem(rng, 2, 2);
    const BetaMatrix beta = random_beta(rng, p.states, 0.05, 2.0);
    const SolveResult r = solve_llr(p, beta);
    ASSERT_TRUE(r.converged);
    // Objective evaluated independently of the library on a grid over
    // (mu_0(a0), mu_1(a0)), refined by repeated zooming around the best point.
    auto value = [&](double x0, double x1) {
      const double eu = p.prior[0] * (x0 * p.utility(0, 0) + (1 - x0) * p.utility(1, 0)) +
                        p.prior[1] * (x1 * p.utility(0, 1) + (1 - x1) * p.utility(1, 1));
      const double kl01 = x0 * std::log(x0 / x1) + (1 - x0) * std::log((1 - x0) / (1 - x1));
      const double kl10 = x1 * std::log(x1 / x0) + (1 - x1) * std::log((1 - x1) / (1 - x0));
      return eu - beta(0, 1) * kl01 - beta(1, 0) * kl10;
    };
    double best = -INFINITY, c0 = 0.5, c1 = 0.5, half = 0.5;
    for (int zoom = 0; zoom < 12; ++zoom) {
      const double lo0 = std::max(c0 - half, 0.0), lo1 = std::max(c1 - half, 0.0);
      const double hi0 = std::min(c0 + half, 1.0), hi1 = std::min(c1 + half, 1.0);
      const int steps = 200;
      for (int i = 1; i < steps; ++i)
        for (int j = 1; j < steps; ++j) {
          const double x0 = lo0 + (hi0 - lo0) * i / steps, x1 = lo1 + (hi1 - lo1) * j / steps;
          const double v = value(x0, x1);
          if (v > best) best = v, c0 = x0, c1 = x1;
        }
      half /= 8;
    }
    EXPECT_GE(r.objective, best - 1e-12);
    EXPECT_NEAR(r.objective, best, 1e-9);
  }
}

TEST(SolveLlr, IsDeterministic) {
  Rng rng(5);
  const DecisionProblem p = random_problem(rng, 4, 3);
  const BetaMatrix beta = random_beta(rng, p.states, 0.05, 5.0);
  const SolveResult a = solve_llr(p, beta);
  const SolveResult b = solve_llr(p, beta);
  EXPECT_EQ(a.rule.probs, b.rule.probs);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.objective, b.objective);
}

TEST(SolveLlr, DominatedActionLeavesSupport) {
  DecisionProblem p = matching(2, {0.5, 0.5});
  p.actions.push_back("bad");
  p.utility.conservativeResize(3, 2);
  p.utility.row(2).setConstant(-1.0);
  const SolveResult r = solve_llr(p, BetaMatrix::constant(p.states, 0.1));
  ASSERT_TRUE(r.converged);
  EXPECT_FALSE(r.support[2]);
  EXPECT_EQ(r.rule.probs.col(2).maxCoeff(), 0.0);
  EXPECT_NEAR(r.rule.probs(0, 0), oracle::matching_accuracy(0.1), 1e-6);
}

TEST(SolveLlr, ZeroBetaWarns) {
  const DecisionProblem p = matching(3, {0.3, 0.3, 0.4});
  const BetaMatrix beta(p.states, matrix_from_rows({{0, 1, 0}, {1, 0, 1}, {0.5, 1, 0}}));
  const SolveResult r = solve_llr(p, beta);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("non-strict concavity"), std::string::npos);
}

TEST(SolveLlr, StateSpaceMismatch) {
  const DecisionProblem p = matching(2, {0.5, 0.5});
  EXPECT_ERROR_CODE(solve_llr(p, BetaMatrix::constant(StateSpace({"x", "y"}), 1.0)),
                    StateSpaceMismatch);
}

TEST(FocResidual, ZeroOnSupport) {
  const DecisionProblem p = matching(2, {0.5, 0.5});
  const ChoiceRule r{matrix_from_rows({{1.0, 0.0}, {0.5, 0.5}})};
  EXPECT_ERROR_CODE(foc_residual(p, BetaMatrix::constant(p.states, 1.0), r), ZeroProbabilityOnSupport);
}

TEST(SolveMutualInformation, HugeLambdaIsUninformative) {
  const DecisionProblem p = matching(3, {0.2, 0.3, 0.5});
  const SolveResult r = solve_mutual_information(p, 1e6);
  ASSERT_TRUE(r.converged);
  for (Eigen::Index a = 0; a < 3; ++a) {
    EXPECT_NEAR(r.rule.probs(0, a), r.rule.probs(1, a), 1e-6);
    EXPECT_NEAR(r.rule.probs(0, a), r.rule.probs(2, a), 1e-6);
  }
  EXPECT_NEAR(r.cost, 0.0, 1e-6);
}

TEST(SolveMutualInformation, EquivalentStatesChooseAlike) {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    DecisionProblem p = random_problem(rng, 5, 3);
    p.utility.col(3) = p.utility.col(1);  // states 1 and 3 are payoff-equivalent
    const SolveResult r = solve_mutual_information(p, rng.uniform(0.1, 2.0));
    ASSERT_TRUE(r.converged);
    for (Eigen::Index a = 0; a < 3; ++a) EXPECT_NEAR(r.rule.probs(1, a), r.rule.probs(3, a), 1e-6);
  }
}

TEST(SolveMutualInformation, CostIsMutualInformationOfRule) {
  const DecisionProblem p = matching(2, {0.5, 0.5});
  const SolveResult r = solve_mutual_information(p, 0.5);
  ASSERT_TRUE(r.converged);
  const Experiment as_experiment = make_experiment(p.states, p.actions, r.rule.probs);
  EXPECT_NEAR(r.cost, mutual_information_cost(as_experiment, p.prior, 0.5), 1e-12);
  EXPECT_LE(mi_fixed_point_residual(p, 0.5, r.rule), 1e-8);
}

TEST(Perception, LlrCurveIsSigmoidAndMiIsFlat) {
  const PsychometricCurve llr = psychometric_curve(10, 1.0, CostKind::Llr, 1.0);
  ASSERT_TRUE(llr.solve.converged);
  ASSERT_EQ(llr.points.size(), 20u);
  for (std::size_t k = 1; k < llr.points.size(); ++k)
    EXPECT_GT(llr.points[k].prob_blue, llr.points[k - 1].prob_blue);
  for (const auto& pt : llr.points) {
    EXPECT_GT(pt.prob_blue, 0.01);
    EXPECT_LT(pt.prob_blue, 0.99);
  }

  const PsychometricCurve mi = psychometric_curve(10, 1.0, CostKind::MutualInformation, 1.0);
  ASSERT_TRUE(mi.solve.converged);
  for (const auto& pt : mi.points) EXPECT_NEAR(pt.prob_correct, mi.points[0].prob_correct, 1e-4);

  const DecisionProblem p = perception_problem(10);
  const auto report = lipschitz_check(llr.solve.rule, *p.states.values(), p.utility_norm());
  EXPECT_TRUE(report.holds) << report.max_ratio;
}

TEST(Perception, Arguments) {
  EXPECT_ERROR_CODE(perception_problem(0), InvalidArgument);
  const ChoiceRule r{matrix_from_rows({{0.5, 0.5}, {0.4, 0.6}})};
  const double same[] = {1.0, 1.0};
  EXPECT_ERROR_CODE(lipschitz_check(r, same, 1.0), DuplicateValues);
}

}  // namespace
}  // namespace infocost
