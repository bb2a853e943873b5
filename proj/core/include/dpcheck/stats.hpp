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

#ifndef DPCHECK_STATS_HPP_
#define DPCHECK_STATS_HPP_

#include <cstdint>

#include "dpcheck/event.hpp"
#include "dpcheck/rng.hpp"
#include "dpcheck/types.hpp"

namespace dpcheck::stats {

// How many binomial thinning draws a p-value is averaged over by default.
// The averaged p-value's variance is already far below decision thresholds
// at 10 draws, and each draw costs one hypergeometric tail evaluation.
inline constexpr int kDefaultResamples = 10;

// Membership counts from running a mechanism n times on each input.
struct CountPair {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t n = 0;

  // Throws InvalidParameterError unless 0 <= c1, c2 <= n and n >= 1.
  static CountPair validated(std::int64_t c1, std::int64_t c2, std::int64_t n);
};

// The two one-sided p-values of a detection test. p_top is evidence that
// P(M(D1) in E) > e^eps * P(M(D2) in E); p_bot is the symmetric direction.
struct PValuePair {
  double p_top = 1.0;
  double p_bot = 1.0;

  double min_p() const { return p_top < p_bot ? p_top : p_bot; }
};

// P(X <= k) for X ~ Hypergeometric(population, successes, draws): the number
// of marked items in `draws` draws without replacement from `population`
// items of which `successes` are marked.
//
// Computed from log-factorials in log space, summing probability mass over
// the support from the side of k nearest the distribution mode; terms that
// can no longer affect the double result are dropped. Exact to ~1e-12
// relative for populations up to several million.
//
// k below the support gives 0, k at or above the support maximum gives 1.
// Throws InvalidParameterError if successes or draws exceed the population
// or are negative, or if population < 1.
double hypergeom_cdf(std::int64_t k, std::int64_t population,
                     std::int64_t successes, std::int64_t draws);

// The one-sided p-value for the null p1 <= e^epsilon * p2, given counts
// c1, c2 out of n runs each.
//
// Each resample thins c1 to c1~ ~ Binomial(c1, e^-epsilon) and evaluates the
// Fisher exact tail 1 - hypergeom_cdf(c1~ - 1 | 2n, n, c1~ + c2); the
// returned value is the mean over `resamples` draws. At epsilon == 0 the
// thinning is the identity and the result is deterministic.
//
// Throws InvalidParameterError if the counts are out of range, epsilon is
// negative, or resamples < 1.
double pvalue(std::int64_t c1, std::int64_t c2, std::int64_t n, double epsilon,
              RngStream& rng, int resamples = kDefaultResamples);

struct HypothesisTestResult {
  CountPair counts;
  PValuePair pvalues;
};

// Runs the mechanism n times on each side of the pair with freshly derived
// streams (phase kDetectionRun), counts outputs in the event, and returns
// both one-sided p-values at the given test epsilon.
//
// Executions are spread over `workers` threads; stream derivation is keyed
// by (side, iteration) so the counts do not depend on the worker count.
HypothesisTestResult hypothesis_test(const Mechanism& mechanism,
                                     const MechanismArgs& args,
                                     double test_epsilon,
                                     const AdjacentInputPair& pair,
                                     const BoundEvent& event, std::int64_t n,
                                     const SeedContext& seeds,
                                     unsigned workers = 0,
                                     int resamples = kDefaultResamples);

}  // namespace dpcheck::stats

#endif  // DPCHECK_STATS_HPP_
