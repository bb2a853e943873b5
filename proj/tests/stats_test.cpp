// Copyright 2026 The dpcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpcheck/stats.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dpcheck/error.hpp"
#include "dpcheck/rng.hpp"
#include "support/oracles.hpp"

namespace dpcheck::stats {
namespace {

TEST(HypergeomCdfTest, EmptyLowerTailIsZero) {
  EXPECT_DOUBLE_EQ(hypergeom_cdf(-1, 10, 5, 5), 0.0);
  EXPECT_DOUBLE_EQ(hypergeom_cdf(-100, 1000, 400, 300), 0.0);
}

TEST(HypergeomCdfTest, FullSupportIsOne) {
  EXPECT_DOUBLE_EQ(hypergeom_cdf(5, 10, 5, 5), 1.0);
  EXPECT_DOUBLE_EQ(hypergeom_cdf(999, 1000, 400, 300), 1.0);
}

TEST(HypergeomCdfTest, SymmetricCaseAtMidpoint) {
  // Hypergeometric(10, 5, 5) is symmetric about 2.5, so P(X <= 2) = 1/2.
  EXPECT_NEAR(hypergeom_cdf(2, 10, 5, 5), 0.5, 1e-12);
}

TEST(HypergeomCdfTest, MatchesExactRationalOracle) {
  // C(5,5) C(5,0) / C(10,5) = 1/252 above 4, so the CDF at 4 is 251/252.
  EXPECT_NEAR(hypergeom_cdf(4, 10, 5, 5), 251.0 / 252.0, 1e-12);

  // Dense comparison over moderate populations.
  for (std::int64_t population : {1, 2, 3, 7, 12, 25}) {
    for (std::int64_t successes = 0; successes <= population; ++successes) {
      for (std::int64_t draws = 0; draws <= population; ++draws) {
        for (std::int64_t k = -1; k <= draws + 1; ++k) {
          const double expected =
              testing::hypergeom_cdf_exact(k, population, successes, draws);
          const double actual =
              hypergeom_cdf(k, population, successes, draws);
          ASSERT_NEAR(actual, expected, 1e-12)
              << "M=" << population << " K=" << successes << " s=" << draws
              << " k=" << k;
        }
      }
    }
  }

  // Spot checks at the top of the exact-oracle range.
  for (std::int64_t k : {0, 10, 25, 29, 30, 31, 45, 59}) {
    ASSERT_NEAR(hypergeom_cdf(k, 60, 30, 30),
                testing::hypergeom_cdf_exact(k, 60, 30, 30), 1e-9);
  }
}

TEST(HypergeomCdfTest, LargePopulationSanity) {
  // With a million-item population the CDF at the mean is close to 1/2 and
  // the function stays within [0, 1] across the support.
  const std::int64_t n = 500000;
  const double mid = hypergeom_cdf(n / 2, 2 * n, n, n);
  EXPECT_GT(mid, 0.49);
  EXPECT_LT(mid, 0.51);
  EXPECT_GE(hypergeom_cdf(n / 2 - 2000, 2 * n, n, n), 0.0);
  EXPECT_LE(hypergeom_cdf(n / 2 + 2000, 2 * n, n, n), 1.0);
  EXPECT_LT(hypergeom_cdf(n / 2 - 2000, 2 * n, n, n), 1e-6);
  EXPECT_GT(hypergeom_cdf(n / 2 + 2000, 2 * n, n, n), 1.0 - 1e-6);
}

TEST(HypergeomCdfTest, RejectsBadParameters) {
  EXPECT_THROW(hypergeom_cdf(1, 10, 11, 5), InvalidParameterError);
  EXPECT_THROW(hypergeom_cdf(1, 10, 5, 11), InvalidParameterError);
  EXPECT_THROW(hypergeom_cdf(1, 0, 0, 0), InvalidParameterError);
  EXPECT_THROW(hypergeom_cdf(1, 10, -1, 5), InvalidParameterError);
  EXPECT_THROW(hypergeom_cdf(1, 10, 5, -2), InvalidParameterError);
}

TEST(CountPairTest, Validation) {
  EXPECT_NO_THROW(CountPair::validated(0, 0, 1));
  EXPECT_NO_THROW(CountPair::validated(5, 5, 5));
  EXPECT_THROW(CountPair::validated(6, 0, 5), InvalidParameterError);
  EXPECT_THROW(CountPair::validated(0, -1, 5), InvalidParameterError);
  EXPECT_THROW(CountPair::validated(0, 0, 0), InvalidParameterError);
}

TEST(PValueTest, ZeroCountGivesExactlyOne) {
  RngStream rng = RngStream::from_keys({11});
  for (double eps : {0.0, 0.1, 1.0, 5.0}) {
    for (std::int64_t c2 : {0, 3, 1000}) {
      EXPECT_DOUBLE_EQ(pvalue(0, c2, 1000, eps, rng), 1.0);
    }
  }
}

TEST(PValueTest, PlainFisherTailAtEpsilonZero) {
  // With eps = 0 the thinning is the identity: c1=5, c2=0, n=5 gives the
  // exact Fisher tail P(X >= 5) = 1/252.
  RngStream rng = RngStream::from_keys({12});
  EXPECT_NEAR(pvalue(5, 0, 5, 0.0, rng, 1), 1.0 / 252.0, 1e-12);
}

TEST(PValueTest, EpsilonZeroReductionHoldsForAnyResampleCount) {
  RngStream seed_rng = RngStream::from_keys({13});
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen() % 400);
    const std::int64_t c1 = static_cast<std::int64_t>(gen() % (n + 1));
    const std::int64_t c2 = static_cast<std::int64_t>(gen() % (n + 1));
    const double direct =
        1.0 - hypergeom_cdf(c1 - 1, 2 * n, n, c1 + c2);
    for (int resamples : {1, 7}) {
      ASSERT_DOUBLE_EQ(pvalue(c1, c2, n, 0.0, seed_rng, resamples), direct)
          << "n=" << n << " c1=" << c1 << " c2=" << c2;
    }
  }
}

TEST(PValueTest, EqualLargeCountsCannotWitnessAGap) {
  RngStream rng = RngStream::from_keys({14});
  const double p = pvalue(1000, 1000, 1000, 0.1, rng, 100);
  EXPECT_GT(p, 0.4);
}

TEST(PValueTest, AlwaysInUnitInterval) {
  RngStream rng = RngStream::from_keys({15});
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen() % 2000);
    const std::int64_t c1 = static_cast<std::int64_t>(gen() % (n + 1));
    const std::int64_t c2 = static_cast<std::int64_t>(gen() % (n + 1));
    const double eps = static_cast<double>(gen() % 300) / 100.0;
    const double p = pvalue(c1, c2, n, eps, rng, 3);
    ASSERT_GE(p, 0.0);
    ASSERT_LE(p, 1.0);
  }
}

TEST(PValueTest, FisherTailNonDecreasingInOpposingCount) {
  // For a fixed thinned count, the tail 1 - cdf(c~ - 1 | 2n, n, c~ + c2)
  // must not decrease as c2 grows.
  for (std::int64_t n : {10, 100, 1000}) {
    for (std::int64_t thinned :
         std::vector<std::int64_t>{1, 3, n / 2, n}) {
      double prev = -1.0;
      for (std::int64_t c2 = 0; c2 <= n; c2 += std::max<std::int64_t>(1, n / 17)) {
        const double tail =
            1.0 - hypergeom_cdf(thinned - 1, 2 * n, n, thinned + c2);
        ASSERT_GE(tail, prev - 1e-12)
            << "n=" << n << " thinned=" << thinned << " c2=" << c2;
        prev = tail;
      }
    }
  }
}

TEST(PValueTest, RejectsBadParameters) {
  RngStream rng = RngStream::from_keys({16});
  EXPECT_THROW(pvalue(6, 0, 5, 0.1, rng), InvalidParameterError);
  EXPECT_THROW(pvalue(0, 6, 5, 0.1, rng), InvalidParameterError);
  EXPECT_THROW(pvalue(1, 1, 5, -0.1, rng), InvalidParameterError);
  EXPECT_THROW(pvalue(1, 1, 5, 0.1, rng, 0), InvalidParameterError);
}

TEST(ThinningTest, TwoStageDrawMatchesDirectBinomial) {
  // Z from X ~ Binomial(n, p1), Z | X ~ Binomial(X, e^-eps) must be
  // Binomial(n, p1 e^-eps); chi-square goodness of fit on 1e5 trials.
  const int n = 50;
  const double p1 = 0.6;
  const double eps = 0.5;
  const double keep = std::exp(-eps);
  const int trials = 100000;

  RngStream rng = RngStream::from_keys({2026, 77});
  std::binomial_distribution<int> first(n, p1);
  std::vector<std::int64_t> observed(n + 1, 0);
  for (int t = 0; t < trials; ++t) {
    const int x = first(rng);
    std::binomial_distribution<int> second(x, keep);
    ++observed[static_cast<std::size_t>(x == 0 ? 0 : second(rng))];
  }

  std::vector<double> expected(n + 1);
  for (int k = 0; k <= n; ++k) {
    expected[static_cast<std::size_t>(k)] =
        testing::binomial_pmf(n, p1 * keep, k);
  }
  const double p = testing::chi_square_gof_pvalue(observed, expected);
  EXPECT_GT(p, 0.01);
}

TEST(TypeICalibrationTest, BoundaryNullRejectionRateIsControlled) {
  // Simulate the boundary null p1 = e^eps p2 directly from binomial draws
  // and check the empirical rejection rate at alpha = 0.05.
  const std::int64_t n = 1000;
  const double p2 = 0.1;
  const double eps = 0.3;
  const double p1 = std::exp(eps) * p2;
  const int reps = 500;

  RngStream rng = RngStream::from_keys({2026, 78});
  std::binomial_distribution<std::int64_t> draw1(n, p1);
  std::binomial_distribution<std::int64_t> draw2(n, p2);
  int rejected = 0;
  for (int r = 0; r < reps; ++r) {
    const std::int64_t c1 = draw1(rng);
    const std::int64_t c2 = draw2(rng);
    if (pvalue(c1, c2, n, eps, rng) <= 0.05) ++rejected;
  }
  const double rate = static_cast<double>(rejected) / reps;
  EXPECT_LE(rate, 0.05 + 3.0 * std::sqrt(0.05 / reps));
}

}  // namespace
}  // namespace dpcheck::stats
