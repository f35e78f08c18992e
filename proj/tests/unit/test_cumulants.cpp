#include <complex>
#include <set>
#include <functional>

#include "infocost/cumulants.hpp"
#include "infocost/llr_distribution.hpp"
#include "infocost/random.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace infocost {
namespace {

MultiIndex mi(std::vector<int> c) { return MultiIndex(std::move(c)); }

FiniteDistribution bernoulli(double p) { return FiniteDistribution({{0.0}, {1.0}}, {1 - p, p}); }

// Moment/cumulant formula evaluated literally over the explicit enumeration of Lambda(alpha).
template <class Out, class In>
Out explicit_sum(const In& in, bool to_cumulants) {
  const IndexBox& box = in.box();
  Out out(box);
  for (std::size_t pa = 1; pa < box.size(); ++pa) {
    const MultiIndex alpha = box.at(pa);
    double total = 0.0;
    for (const auto& parts : enumerate_lambda(alpha)) {
      const int q = static_cast<int>(parts.size());
      double coef = static_cast<double>(factorial(alpha));
      double prod = 1.0;
      for (const auto& l : parts) {
        coef /= static_cast<double>(factorial(l));
        prod *= in[l];
      }
      double qf = 1.0;
      for (int j = 2; j <= q; ++j) qf *= j;
      const double weight = to_cumulants ? ((q % 2 ? 1.0 : -1.0) / q) : 1.0 / qf;
      total += weight * coef * prod;
    }
    out.at_position(pa) = total;
  }
  return out;
}

TEST(MultiIndex, Basics) {
  const MultiIndex a = mi({2, 0, 3});
  EXPECT_EQ(a.order(), 5);
  EXPECT_TRUE(mi({1, 0, 3}).leq(a));
  EXPECT_FALSE(mi({3, 0, 0}).leq(a));
  EXPECT_EQ(factorial(a), 12u);
  EXPECT_EQ(binomial(a, mi({1, 0, 2})), 6u);
  const IndexBox box(3, 4);
  EXPECT_EQ(box.size(), 125u);
  EXPECT_EQ(box.at(box.position(a)), a);
  EXPECT_EQ(box.nonzero_indices().size(), 124u);
}

TEST(Moments, Examples) {
  const MomentVector pm = moments(FiniteDistribution::point_mass({2.0, -1.0}), 3);
  EXPECT_DOUBLE_EQ(pm[mi({2, 3})], 4.0 * -1.0);
  EXPECT_DOUBLE_EQ(pm[mi({3, 0})], 8.0);

  const MomentVector b = moments(bernoulli(0.3), 4);
  for (int k = 1; k <= 4; ++k) EXPECT_DOUBLE_EQ(b[mi({k})], 0.3);

  const MomentVector sym = moments(FiniteDistribution({{-1.0}, {1.0}}, {0.5, 0.5}), 4);
  EXPECT_DOUBLE_EQ(sym[mi({1})], 0.0);
  EXPECT_DOUBLE_EQ(sym[mi({2})], 1.0);
  EXPECT_DOUBLE_EQ(sym[mi({3})], 0.0);
  EXPECT_DOUBLE_EQ(sym[mi({4})], 1.0);
}

TEST(Moments, Guards) {
  const FiniteDistribution five = FiniteDistribution::point_mass({0, 0, 0, 0, 0});
  EXPECT_ERROR_CODE(moments(five, 2), DimensionTooLarge);
  EXPECT_ERROR_CODE(moments(bernoulli(0.5), 5), DimensionTooLarge);
  EXPECT_ERROR_CODE(moments(bernoulli(0.5), 0), InvalidArgument);
  EXPECT_ERROR_CODE(FiniteDistribution({{0.0}, {1.0}}, {0.5, 0.6}), RowSumViolation);
  EXPECT_ERROR_CODE(FiniteDistribution({{0.0}, {1.0, 2.0}}, {0.5, 0.5}), DimensionMismatch);
  EXPECT_ERROR_CODE(FiniteDistribution({{0.0}, {1.0}}, {-0.5, 1.5}), InvalidArgument);
}

TEST(FiniteDistribution, MergesCloseAtoms) {
  const FiniteDistribution d({{1.0}, {1.0 + 1e-14}, {2.0}}, {0.25, 0.25, 0.5});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d.weights()[0], 0.5);
}

TEST(EnumerateLambda, Examples) {
  using L = std::vector<std::vector<MultiIndex>>;
  EXPECT_EQ(enumerate_lambda(mi({1})), (L{{mi({1})}}));
  EXPECT_EQ(enumerate_lambda(mi({2})), (L{{mi({2})}, {mi({1}), mi({1})}}));
  EXPECT_EQ(enumerate_lambda(mi({1, 1})),
            (L{{mi({1, 1})}, {mi({1, 0}), mi({0, 1})}, {mi({0, 1}), mi({1, 0})}}));
  EXPECT_ERROR_CODE(enumerate_lambda(mi({0, 0})), InvalidArgument);
}

TEST(EnumerateLambda, CompleteAndDuplicateFree) {
  const IndexBox box(2, 3);
  for (const MultiIndex& alpha : box.nonzero_indices()) {
    const auto all = enumerate_lambda(alpha);
    EXPECT_EQ(all.size(), count_lambda(alpha));
    std::set<std::vector<MultiIndex>> unique(all.begin(), all.end());
    EXPECT_EQ(unique.size(), all.size());
    for (const auto& parts : all) {
      MultiIndex sum = MultiIndex::zero(2);
      for (const auto& l : parts) {
        EXPECT_FALSE(l.is_zero());
        sum = sum + l;
      }
      EXPECT_EQ(sum, alpha);
    }
  }
  // Ordered compositions of n into positive parts: 2^(n-1).
  EXPECT_EQ(count_lambda(mi({4})), 8u);
  // Inclusion-exclusion over empty parts: ordered collections of q
  // non-zero vectors summing to alpha number
  // sum_j (-1)^j C(q, j) prod_k C(alpha_k + q - j - 1, q - j - 1).
  auto choose = [](int n, int k) {
    __int128 c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
  };
  auto oracle_count = [&](const std::vector<int>& a) {
    int total = 0;
    for (int x : a) total += x;
    __int128 count = 0;
    for (int q = 1; q <= total; ++q)
      for (int j = 0; j < q; ++j) {
        __int128 term = choose(q, j) * (j % 2 ? -1 : 1);
        for (int x : a) term *= choose(x + q - j - 1, q - j - 1);
        count += term;
      }
    return static_cast<std::uint64_t>(count);
  };
  for (const auto& a : std::vector<std::vector<int>>{{4}, {2, 3}, {4, 4, 4}, {1, 2, 3, 4}, {4, 4, 4, 4}})
    EXPECT_EQ(count_lambda(MultiIndex(a)), oracle_count(a));
}

TEST(Conversion, AllMethodsAgreeWithExplicitEnumeration) {
  Rng rng(1);
  for (auto [dim, order] : {std::pair{1, 4}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    const FiniteDistribution d = random_distribution(rng, dim, 4);
    const MomentVector m = moments(d, order);
    const auto oracle = explicit_sum<CumulantVector>(m, true);
    const auto rec = moments_to_cumulants(m, Conversion::Recursive);
    const auto comp = moments_to_cumulants(m, Conversion::Compositions);
    const auto back = explicit_sum<MomentVector>(oracle, false);
    const auto back_rec = cumulants_to_moments(oracle, Conversion::Recursive);
    const auto back_comp = cumulants_to_moments(oracle, Conversion::Compositions);
    for (std::size_t p = 1; p < m.box().size(); ++p) {
      EXPECT_NEAR(rec.at_position(p), oracle.at_position(p), 1e-12);
      EXPECT_NEAR(comp.at_position(p), oracle.at_position(p), 1e-12);
      EXPECT_NEAR(back.at_position(p), m.at_position(p), 1e-12);
      EXPECT_NEAR(back_rec.at_position(p), m.at_position(p), 1e-12);
      EXPECT_NEAR(back_comp.at_position(p), m.at_position(p), 1e-12);
    }
  }
}

TEST(Conversion, LowOrderScalarFormulas) {
  const FiniteDistribution d({{-0.3}, {0.4}, {1.1}}, {0.2, 0.5, 0.3});
  const MomentVector m = moments(d, 4);
  const CumulantVector k = moments_to_cumulants(m);
  const double m1 = m[mi({1})], m2 = m[mi({2})], m3 = m[mi({3})];
  EXPECT_NEAR(k[mi({1})], m1, 1e-15);
  EXPECT_NEAR(k[mi({2})], m2 - m1 * m1, 1e-15);
  EXPECT_NEAR(k[mi({3})], m3 - 3 * m2 * m1 + 2 * m1 * m1 * m1, 1e-15);
  // The variant with coefficient -2 on m2 m1 is not the third cumulant.
  EXPECT_GT(std::abs(k[mi({3})] - (m3 - 2 * m2 * m1 + 2 * m1 * m1 * m1)), 1e-3);
}

TEST(Conversion, BernoulliMatchesCharacteristicFunction) {
  for (double p : {0.1, 0.3, 0.5, 0.8}) {
    const CumulantVector k = cumulants(bernoulli(p), 4);
    auto phi = [p](double t) {
      return std::complex<double>(1 - p) + p * std::exp(std::complex<double>(0, t));
    };
    for (int n = 1; n <= 4; ++n)
      EXPECT_NEAR(k[mi({n})], oracle::char_function_cumulant(phi, n), 1e-6) << "p " << p << " n " << n;
    EXPECT_NEAR(k[mi({3})], p * (1 - p) * (1 - 2 * p), 1e-15);
  }
}

TEST(Conversion, NormalTruncation) {
  CumulantVector k(IndexBox(1, 4));
  k[mi({2})] = 1.0;
  const MomentVector m = cumulants_to_moments(k);
  EXPECT_DOUBLE_EQ(m[mi({1})], 0.0);
  EXPECT_DOUBLE_EQ(m[mi({2})], 1.0);
  EXPECT_DOUBLE_EQ(m[mi({3})], 0.0);
  EXPECT_DOUBLE_EQ(m[mi({4})], 3.0);

  CumulantVector point(IndexBox(1, 4));
  point[mi({1})] = 1.5;
  const MomentVector pm = cumulants_to_moments(point);
  for (int j = 1; j <= 4; ++j) EXPECT_DOUBLE_EQ(pm[mi({j})], std::pow(1.5, j));
}

TEST(Conversion, RoundTrip) {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const FiniteDistribution d = random_distribution(rng, rng.integer(1, 3), 5);
    const MomentVector m = moments(d, 4);
    const MomentVector back = cumulants_to_moments(moments_to_cumulants(m));
    for (std::size_t p = 1; p < m.box().size(); ++p)
      ASSERT_NEAR(back.at_position(p), m.at_position(p), 1e-10);
  }
}

TEST(IndexedValues, FromMap) {
  const IndexBox box(1, 2);
  const auto k = CumulantVector::from_map(box, {{mi({1}), 0.5}, {mi({2}), 2.0}});
  EXPECT_EQ(k[mi({2})], 2.0);
  EXPECT_ERROR_CODE(CumulantVector::from_map(box, {{mi({1}), 0.5}}), IncompleteInput);
}

TEST(Convolve, Examples) {
  const auto pm = convolve(FiniteDistribution::point_mass({1.0, 2.0}),
                           FiniteDistribution::point_mass({0.5, -1.0}));
  ASSERT_EQ(pm.size(), 1u);
  EXPECT_EQ(pm.atoms()[0], (std::vector<double>{1.5, 1.0}));

  const auto bin = convolve(bernoulli(0.3), bernoulli(0.3));
  ASSERT_EQ(bin.size(), 3u);
  EXPECT_NEAR(bin.weights()[0], 0.49, 1e-15);
  EXPECT_NEAR(bin.weights()[1], 0.42, 1e-15);
  EXPECT_NEAR(bin.weights()[2], 0.09, 1e-15);
  EXPECT_ERROR_CODE(convolve(bernoulli(0.3), FiniteDistribution::point_mass({0, 0})), DimensionMismatch);
}

TEST(Convolve, CumulantsAdd) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const int dim = rng.integer(1, 3);
    const auto a = random_distribution(rng, dim, 3);
    const auto b = random_distribution(rng, dim, 4);
    const auto ka = cumulants(a, 4), kb = cumulants(b, 4), kab = cumulants(convolve(a, b), 4);
    for (std::size_t p = 1; p < ka.box().size(); ++p) {
      const double expected = ka.at_position(p) + kb.at_position(p);
      ASSERT_NEAR(kab.at_position(p), expected, 1e-9 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(Cumulants, LlrMomentsMatchSignalExpectations) {
  const Experiment mu = test::from_rows({{0.5, 0.3, 0.2}, {0.1, 0.6, 0.3}, {0.2, 0.2, 0.6}});
  const LLRDistribution sigma = llr_distribution(mu);
  for (std::size_t i = 0; i < 3; ++i) {
    const MomentVector m = moments(state_distribution(sigma, i), 3);
    for (const MultiIndex& alpha : m.box().nonzero_indices()) {
      double direct = 0.0;
      for (std::size_t s = 0; s < 3; ++s)
        direct += mu.row(i)[s] * std::pow(std::log(mu.row(1)[s] / mu.row(0)[s]), alpha[0]) *
                  std::pow(std::log(mu.row(2)[s] / mu.row(0)[s]), alpha[1]);
      EXPECT_NEAR(m[alpha], direct, 1e-13);
    }
  }
}

}  // namespace
}  // namespace infocost
