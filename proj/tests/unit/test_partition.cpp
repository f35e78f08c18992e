#include <chrono>
#include <cmath>

#include "infocost/costs.hpp"
#include "infocost/partition.hpp"
#include "infocost/random.hpp"
#include "test_util.hpp"

namespace infocost {
namespace {

TEST(Hypothesis, Validation) {
  EXPECT_ERROR_CODE(Hypothesis({}, 3), InvalidHypothesis);
  EXPECT_ERROR_CODE(Hypothesis({0, 1, 2}, 3), InvalidHypothesis);
  EXPECT_ERROR_CODE(Hypothesis({3}, 3), InvalidHypothesis);
  const Hypothesis h({2, 0, 2}, 4);
  EXPECT_EQ(h.members(), (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(h.contains(2));
  EXPECT_FALSE(h.contains(1));
}

TEST(PartitionCoefficient, SmallHandExample) {
  // States 0..2, H = {0}: beta_01 + beta_10 + beta_02 + beta_20.
  const BetaMatrix beta(StateSpace::indexed(3), matrix_from_rows({{0, 1, 2}, {3, 0, 4}, {5, 6, 0}}));
  EXPECT_EQ(partition_coefficient(beta, Hypothesis({0}, 3)), 1.0 + 3.0 + 2.0 + 5.0);
}

TEST(HypothesisTest, ClosedFormMatchesExplicitExperiment) {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 8));
    const StateSpace s = StateSpace::indexed(n);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (rng.uniform() < 0.5) members.push_back(i);
    if (members.empty()) members.push_back(0);
    if (members.size() == n) members.pop_back();
    const Hypothesis h(members, n);
    const BetaMatrix beta = random_beta(rng, s, 0.0, 5.0);
    const double alpha = rng.uniform(0.01, 0.99);
    const double explicit_cost = llr_cost(hypothesis_test_experiment(s, h, alpha), beta);
    EXPECT_NEAR(hypothesis_test_cost(beta, h, alpha), explicit_cost,
                1e-12 * std::max(1.0, explicit_cost));
  }
  EXPECT_ERROR_CODE(hypothesis_test_cost(BetaMatrix::constant(StateSpace::indexed(2), 1.0),
                                         Hypothesis({0}, 2), 1.0),
                    AlphaOutOfRange);
}

TEST(Grid, CrossingCountsMatchEnumeration) {
  for (std::int64_t first : {-3, 0, 7}) {
    for (std::int64_t size : {2, 3, 10, 57}) {
      const InverseSquareGrid grid{first, first + size - 1, 1.0};
      std::vector<GridHypothesis> hs{GridHypothesis::even()};
      for (std::int64_t t = first; t < first + size - 1; t += 3) hs.push_back(GridHypothesis::above(t));
      for (const auto& h : hs)
        EXPECT_EQ(crossing_pair_counts(grid, h), crossing_pair_counts_naive(grid, h))
            << "first " << first << " size " << size << " threshold " << h.threshold;
    }
  }
}

TEST(Grid, FastPathEqualsNaiveExactly) {
  for (std::int64_t size : {2, 3, 17, 100, 199, 200}) {
    for (double kappa : {1.0, 0.3}) {
      const InverseSquareGrid grid{1000, 1000 + size - 1, kappa};
      const BetaMatrix beta = grid.betas();
      for (const auto& h : {GridHypothesis::even(), GridHypothesis::above(1000 + (size - 1) / 2)}) {
        const double fast = partition_coefficient(grid, h);
        const double naive = partition_coefficient(beta, h.on(grid));
        EXPECT_EQ(fast, naive) << "size " << size;
        EXPECT_EQ(hypothesis_test_cost(grid, h, 0.8), hypothesis_test_cost(beta, h.on(grid), 0.8));
      }
    }
  }
}

TEST(Grid, GdpValues) {
  const InverseSquareGrid grid{20000, 80000, 1.0};
  const auto start = std::chrono::steady_clock::now();
  const double h1 = partition_coefficient(grid, GridHypothesis::above(50000));
  const double h2 = partition_coefficient(grid, GridHypothesis::even());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_GE(h1, 21.0);
  EXPECT_LE(h1, 23.5);
  EXPECT_GE(h2, 147900.0);
  EXPECT_LE(h2, 148200.0);
  EXPECT_LT(seconds, 1.0);

  // Parity: every pair at odd distance d crosses, and there are N - d of them.
  long double parity = 0.0L;
  const long double n = 60001.0L;
  for (long double d = 1; d < n; d += 2) parity += 2.0L * (n - d) / (d * d);
  EXPECT_NEAR(h2, static_cast<double>(parity), 1e-6 * h2);
}

}  // namespace
}  // namespace infocost
