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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "dpcheck/error.hpp"
#include "dpcheck/runner.hpp"

namespace dpcheck::stats {
namespace {

// log(v!) for all v up to max_value, cached per thread. The cache never
// shrinks, so returned pointers stay valid for the thread's lifetime.
const double* logfact_table(std::size_t max_value) {
  thread_local std::vector<double> table;
  if (table.size() <= max_value) {
    const std::size_t old_size = table.size();
    table.resize(max_value + 1);
    for (std::size_t v = old_size; v < table.size(); ++v) {
      table[v] = std::lgamma(static_cast<double>(v) + 1.0);
    }
  }
  return table.data();
}

// Terms whose relative contribution falls below this bound are dropped;
// the truncation error stays orders of magnitude below double rounding of
// the full sum.
constexpr double kTailTermCutoff = 1e-18;

}  // namespace

CountPair CountPair::validated(std::int64_t c1, std::int64_t c2,
                               std::int64_t n) {
  if (n < 1) {
    throw InvalidParameterError("counts: n must be at least 1");
  }
  if (c1 < 0 || c2 < 0 || c1 > n || c2 > n) {
    throw InvalidParameterError("counts: c1 and c2 must lie in [0, n]");
  }
  return CountPair{c1, c2, n};
}

double hypergeom_cdf(std::int64_t k, std::int64_t population,
                     std::int64_t successes, std::int64_t draws) {
  if (population < 1) {
    throw InvalidParameterError("hypergeom_cdf: population must be positive");
  }
  if (successes < 0 || successes > population) {
    throw InvalidParameterError(
        "hypergeom_cdf: successes must lie in [0, population]");
  }
  if (draws < 0 || draws > population) {
    throw InvalidParameterError(
        "hypergeom_cdf: draws must lie in [0, population]");
  }

  const std::int64_t support_lo =
      std::max<std::int64_t>(0, draws - (population - successes));
  const std::int64_t support_hi = std::min(successes, draws);
  if (k < support_lo) return 0.0;
  if (k >= support_hi) return 1.0;

  const double* lf = logfact_table(static_cast<std::size_t>(population));
  const auto log_pmf = [&](std::int64_t j) {
    return lf[successes] - lf[j] - lf[successes - j] +
           lf[population - successes] - lf[draws - j] -
           lf[population - successes - draws + j] -
           (lf[population] - lf[draws] - lf[population - draws]);
  };

  const auto mode = static_cast<std::int64_t>(
      (static_cast<double>(draws + 1) * static_cast<double>(successes + 1)) /
      static_cast<double>(population + 2));

  // Sum the side of k whose terms shrink as we move away from the mode, so
  // the anchor term is the largest and the running sum can stop early.
  if (k < mode) {
    // P(X <= k), anchored at k, stepping down.
    double term = std::exp(log_pmf(k));
    double sum = term;
    for (std::int64_t j = k; j > support_lo; --j) {
      term *= static_cast<double>(j) *
              static_cast<double>(population - successes - draws + j) /
              (static_cast<double>(successes - j + 1) *
               static_cast<double>(draws - j + 1));
      sum += term;
      if (term <= sum * kTailTermCutoff) break;
    }
    return std::min(sum, 1.0);
  }

  // P(X > k), anchored at k + 1, stepping up.
  double term = std::exp(log_pmf(k + 1));
  double sum = term;
  for (std::int64_t j = k + 1; j < support_hi; ++j) {
    term *= static_cast<double>(successes - j) *
            static_cast<double>(draws - j) /
            (static_cast<double>(j + 1) *
             static_cast<double>(population - successes - draws + j + 1));
    sum += term;
    if (term <= sum * kTailTermCutoff) break;
  }
  return std::max(0.0, 1.0 - sum);
}

double pvalue(std::int64_t c1, std::int64_t c2, std::int64_t n, double epsilon,
              RngStream& rng, int resamples) {
  CountPair::validated(c1, c2, n);
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw InvalidParameterError("pvalue: epsilon must be finite and >= 0");
  }
  if (resamples < 1) {
    throw InvalidParameterError("pvalue: resamples must be at least 1");
  }

  const auto fisher_tail = [&](std::int64_t thinned) {
    return 1.0 - hypergeom_cdf(thinned - 1, 2 * n, n, thinned + c2);
  };

  // A zero count thins to zero and P(X >= 0) = 1, for any epsilon.
  if (c1 == 0) return 1.0;

  const double keep = std::exp(-epsilon);
  if (keep >= 1.0) {
    // epsilon == 0: the thinning is the identity and every resample agrees.
    return fisher_tail(c1);
  }

  std::binomial_distribution<std::int64_t> thin(c1, keep);
  double total = 0.0;
  for (int r = 0; r < resamples; ++r) {
    total += fisher_tail(thin(rng));
  }
  return total / static_cast<double>(resamples);
}

HypothesisTestResult hypothesis_test(const Mechanism& mechanism,
                                     const MechanismArgs& args,
                                     double test_epsilon,
                                     const AdjacentInputPair& pair,
                                     const BoundEvent& event, std::int64_t n,
                                     const SeedContext& seeds, unsigned workers,
                                     int resamples) {
  if (n < 1) {
    throw InvalidParameterError("hypothesis_test: n must be at least 1");
  }

  const auto count_side = [&](const QueryAnswerVector& answers,
                              std::uint64_t side) {
    try {
      return count_runs(
          mechanism, answers, args, n, workers,
          [&](std::size_t i) {
            return seeds.stream(StreamPhase::kDetectionRun, side, i);
          },
          [&](const MechanismOutput& output) {
            return event.contains(output);
          });
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error("hypothesis_test: mechanism '" +
                  std::string(mechanism.name()) + "' failed on D" +
                  std::to_string(side + 1) + ": " + e.what());
    }
  };

  HypothesisTestResult result;
  result.counts =
      CountPair::validated(count_side(pair.d1, 0), count_side(pair.d2, 1), n);

  RngStream top_rng = seeds.stream(StreamPhase::kDetectionPValue, 0, 0);
  RngStream bot_rng = seeds.stream(StreamPhase::kDetectionPValue, 1, 0);
  result.pvalues.p_top = pvalue(result.counts.c1, result.counts.c2, n,
                                test_epsilon, top_rng, resamples);
  result.pvalues.p_bot = pvalue(result.counts.c2, result.counts.c1, n,
                                test_epsilon, bot_rng, resamples);
  return result;
}

}  // namespace dpcheck::stats
