#include <cmath>

#include "infocost/costs.hpp"
#include "infocost/random.hpp"
#include "test_util.hpp"

namespace infocost {
namespace {

using test::binary;

const StateSpace kTwo = StateSpace::indexed(2);

TEST(BetaMatrix, Validation) {
  EXPECT_ERROR_CODE(BetaMatrix(kTwo, matrix_from_rows({{0, -1}, {1, 0}})), NegativeBeta);
  EXPECT_ERROR_CODE(BetaMatrix(kTwo, Matrix::Ones(3, 3)), DimensionMismatch);
  EXPECT_ERROR_CODE(BetaMatrix(kTwo, matrix_from_rows({{0, INFINITY}, {1, 0}})), InvalidArgument);
  // The diagonal is ignored, even when negative.
  EXPECT_NO_THROW(BetaMatrix(kTwo, matrix_from_rows({{-5, 1}, {1, 0}})));
  EXPECT_FALSE(BetaMatrix(kTwo, matrix_from_rows({{0, 0}, {1, 0}})).strictly_positive());
  EXPECT_TRUE(BetaMatrix::constant(kTwo, 2.0).strictly_positive());
}

TEST(BetaMatrix, OneDimensionalRules) {
  const StateSpace s = StateSpace::from_values({0.0, 1.0, 3.0});
  const BetaMatrix b = one_dimensional_betas(s, 6.0);
  EXPECT_DOUBLE_EQ(b(0, 1), 6.0 / (3 * 2 * 1.0));
  EXPECT_DOUBLE_EQ(b(2, 0), 6.0 / (3 * 2 * 9.0));
  const BetaMatrix u = inverse_square_betas(s, 2.0);
  EXPECT_DOUBLE_EQ(u(1, 2), 2.0 / 4.0);
  EXPECT_ERROR_CODE(one_dimensional_betas(kTwo, 1.0), MissingValues);
  EXPECT_ERROR_CODE(inverse_square_betas(s, 0.0), InvalidArgument);
}

TEST(LlrCost, Examples) {
  const BetaMatrix one = BetaMatrix::constant(kTwo, 1.0);
  EXPECT_EQ(llr_cost(uninformative(kTwo), one), 0.0);
  const double expected = 2.0 * 0.6 * std::log(4.0);
  EXPECT_NEAR(llr_cost(binary(0.8), one), expected, 1e-15);
  EXPECT_NEAR(llr_cost(binary(0.8), one), 1.663553, 1e-6);
  EXPECT_ERROR_CODE(llr_cost(binary(0.8), BetaMatrix::constant(StateSpace({"H", "L"}), 1.0)),
                    StateSpaceMismatch);
}

TEST(LlrCost, TermsSumToCost) {
  Rng rng(3);
  const StateSpace s = StateSpace::indexed(4);
  const Experiment mu = random_experiment(rng, s, 5);
  const BetaMatrix beta = random_beta(rng, s, 0.0, 3.0);
  const auto terms = llr_cost_terms(mu, beta);
  ASSERT_EQ(terms.size(), 12u);
  double sum = 0.0;
  for (const auto& t : terms) {
    EXPECT_NE(t.i, t.j);
    EXPECT_DOUBLE_EQ(t.term, t.beta * t.kl);
    sum += t.term;
  }
  EXPECT_NEAR(sum, llr_cost(mu, beta), 1e-12);
}

TEST(LlrCost, ProductAndDilution) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const StateSpace s = StateSpace::indexed(3);
    const Experiment a = random_experiment(rng, s, 3);
    const Experiment b = random_experiment(rng, s, 2);
    const BetaMatrix beta = random_beta(rng, s, 0.0, 5.0);
    EXPECT_NEAR(llr_cost(product(a, b), beta), llr_cost(a, beta) + llr_cost(b, beta), 1e-10);
    EXPECT_NEAR(llr_cost(dilute(a, 0.5), beta), 0.5 * llr_cost(a, beta), 1e-12);
    const GarblingMatrix g = random_garbling(rng, 3, 3);
    EXPECT_LE(llr_cost(garble(a, g), beta), llr_cost(a, beta) + 1e-12);
  }
}

TEST(BinaryCost, MatchesLlrCostAndIsMonotone) {
  const BetaMatrix beta(kTwo, matrix_from_rows({{0, 0.7}, {1.3, 0}}));
  EXPECT_EQ(binary_cost(0.5, beta), 0.0);
  EXPECT_NEAR(binary_cost(0.8, BetaMatrix::constant(kTwo, 1.0)), 1.663553, 1e-6);
  double last = 0.0;
  for (double p = 0.51; p < 0.999; p += 0.01) {
    const double c = binary_cost(p, beta);
    EXPECT_NEAR(c, llr_cost(binary(p), beta), 1e-12 * std::max(1.0, c));
    EXPECT_GT(c, last);
    last = c;
  }
  EXPECT_ERROR_CODE(binary_cost(1.0, beta), POutOfRange);
  EXPECT_ERROR_CODE(binary_cost(0.0, beta), POutOfRange);
}

TEST(NormalCost, ClosedForm) {
  const StateSpace s = StateSpace::from_values({0.0, 1.0});
  const double means[] = {0.0, 1.0};
  // beta_01 = beta_10 = 1/2, so the cost is 2 * (1/2) * 1/2.
  EXPECT_DOUBLE_EQ(normal_cost(means, 1.0, one_dimensional_betas(s, 1.0)), 0.5);
  EXPECT_DOUBLE_EQ(normal_cost(means, 2.0, one_dimensional_betas(s, 1.0)), 0.125);
  EXPECT_ERROR_CODE(normal_cost(means, 0.0, one_dimensional_betas(s, 1.0)), SigmaNonPositive);
  const double three[] = {0.0, 1.0, 2.0};
  EXPECT_ERROR_CODE(normal_cost(three, 1.0, one_dimensional_betas(s, 1.0)), DimensionMismatch);
}

TEST(MutualInformation, SingleCoinFlip) {
  const double uniform[] = {0.5, 0.5};
  // ln 2 - H(0.8), computed directly.
  const double expected = std::log(2.0) + 0.8 * std::log(0.8) + 0.2 * std::log(0.2);
  EXPECT_NEAR(mutual_information_cost(binary(0.8), uniform), expected, 1e-15);
  EXPECT_NEAR(mutual_information_cost(binary(0.8), uniform), 0.192745, 1e-6);
  EXPECT_NEAR(mutual_information_cost(binary(0.8), uniform, 3.0), 3.0 * expected, 1e-14);
  const double bad[] = {1.0, 0.0};
  EXPECT_ERROR_CODE(mutual_information_cost(binary(0.8), bad), PriorNotFullSupport);
}

TEST(CoinFlip, SufficientStatisticMatchesExplicitProduct) {
  const double uniform[] = {0.5, 0.5};
  const BetaMatrix beta = BetaMatrix::constant(kTwo, 1.0);
  for (int k = 1; k <= 10; ++k) {
    const Experiment muk = power(binary(0.8), k);
    EXPECT_NEAR(coin_flip_mutual_information(0.8, k), mutual_information_cost(muk, uniform), 1e-12);
    EXPECT_NEAR(coin_flip_llr_cost(0.8, k, beta), llr_cost(muk, beta), 1e-11);
  }
}

TEST(CoinFlip, MutualInformationSaturatesAtLog2) {
  double prev = 0.0, prev_gain = INFINITY;
  for (int k = 1; k <= 30; ++k) {
    const double c = coin_flip_mutual_information(0.8, k);
    EXPECT_GT(c, prev);
    EXPECT_LE(c - prev, prev_gain + 1e-15);
    EXPECT_LT(c, std::log(2.0));
    prev_gain = c - prev;
    prev = c;
  }
  // Past k of about 60 the gap to ln 2 is below double resolution.
  for (int k = 31; k <= 200; ++k) {
    const double c = coin_flip_mutual_information(0.8, k);
    EXPECT_GE(c, prev);
    EXPECT_LE(c, std::log(2.0) + 1e-15);
    prev = c;
  }
  EXPECT_NEAR(prev, std::log(2.0), 1e-12);
}

TEST(PosteriorSeparable, MatchesLlrCost) {
  Rng rng(99);
  for (int t = 0; t < 300; ++t) {
    const StateSpace s = StateSpace::indexed(static_cast<std::size_t>(rng.integer(2, 5)));
    const Experiment mu = random_experiment(rng, s, static_cast<std::size_t>(rng.integer(1, 6)));
    const BetaMatrix beta = random_beta(rng, s, 0.0, 5.0);
    const Distribution prior = random_row(rng, s.size());
    const double c = llr_cost(mu, beta);
    EXPECT_NEAR(llr_cost_via_posteriors(mu, beta, prior), c, 1e-9 * std::max(1.0, c));
  }
}

TEST(PosteriorSeparable, Errors) {
  const BetaMatrix beta = BetaMatrix::constant(kTwo, 1.0);
  const double prior[] = {0.5, 0.5};
  const double edge[] = {1.0, 0.0};
  EXPECT_ERROR_CODE(posterior_separable_value(beta, prior, edge), NotFullSupport);
  EXPECT_ERROR_CODE(llr_cost_via_posteriors(binary(0.8), beta, edge), PriorNotFullSupport);
}

TEST(Asymmetry, FirstOrderBehaviour) {
  const double eps = 1e-4;
  const AsymmetryCosts c = verification_asymmetry(eps, 1.0);
  EXPECT_NEAR(c.cost_falsify / eps, 1.0, 0.01);
  const double ratio = c.cost_verify / c.cost_falsify;
  EXPECT_GE(ratio, std::log(1 / eps) - 2);
  EXPECT_LE(ratio, std::log(1 / eps));
  // Independent evaluation of both KL terms.
  const double e2 = eps * eps;
  const double kl_i = (1 - e2) * std::log((1 - e2) / (1 - eps)) + e2 * std::log(e2 / eps);
  const double kl_ii = (1 - eps) * std::log((1 - eps) / (1 - e2)) + eps * std::log(eps / e2);
  EXPECT_NEAR(c.cost_falsify, kl_i, 1e-15);
  EXPECT_NEAR(c.cost_verify, kl_ii, 1e-15);
  EXPECT_DOUBLE_EQ(verification_asymmetry(eps, 3.0).cost_verify, 3.0 * c.cost_verify);
}

TEST(Asymmetry, EpsilonRange) {
  EXPECT_ERROR_CODE(verification_asymmetry(0.0, 1.0), EpsilonOutOfRange);
  EXPECT_ERROR_CODE(verification_asymmetry(0.5, 1.0), EpsilonOutOfRange);
  EXPECT_ERROR_CODE(verification_asymmetry(1e-7, 1.0), EpsilonOutOfRange);
  EXPECT_EQ(falsification_experiment(0.1).states().labels()[1], "e");
}

}  // namespace
}  // namespace infocost
