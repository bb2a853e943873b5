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

#include "dpcheck/input_generator.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "dpcheck/error.hpp"
#include "dpcheck/mechanisms.hpp"

namespace dpcheck {
namespace {

const AdjacentInputPair& find_pair(const std::vector<AdjacentInputPair>& pairs,
                                   Category category, std::size_t length) {
  for (const auto& pair : pairs) {
    if (pair.category == category && pair.length() == length) return pair;
  }
  ADD_FAILURE() << "pair not found";
  static AdjacentInputPair dummy;
  return dummy;
}

TEST(GenerateDatabasesTest, ReproducesCanonicalLengthFivePatterns) {
  const std::size_t lengths[] = {5};
  const auto pairs = generate_databases(lengths, 1.0);
  // Seven categories, with the all-above/all-below category contributing
  // both directions.
  ASSERT_EQ(pairs.size(), 8u);

  const auto& one_above = find_pair(pairs, Category::kOneAbove, 5);
  EXPECT_EQ(one_above.d1, QueryAnswerVector({1, 1, 1, 1, 1}));
  EXPECT_EQ(one_above.d2, QueryAnswerVector({2, 1, 1, 1, 1}));

  const auto& one_below = find_pair(pairs, Category::kOneBelow, 5);
  EXPECT_EQ(one_below.d2, QueryAnswerVector({0, 1, 1, 1, 1}));

  const auto& oarb = find_pair(pairs, Category::kOneAboveRestBelow, 5);
  EXPECT_EQ(oarb.d2, QueryAnswerVector({2, 0, 0, 0, 0}));

  const auto& obra = find_pair(pairs, Category::kOneBelowRestAbove, 5);
  EXPECT_EQ(obra.d2, QueryAnswerVector({0, 2, 2, 2, 2}));

  const auto& half = find_pair(pairs, Category::kHalfHalf, 5);
  EXPECT_EQ(half.d2, QueryAnswerVector({0, 0, 0, 2, 2}));

  const auto& all = find_pair(pairs, Category::kAllAboveAllBelow, 5);
  EXPECT_EQ(all.d2, QueryAnswerVector({2, 2, 2, 2, 2}));
  int all_pairs = 0;
  bool saw_mirror = false;
  for (const auto& pair : pairs) {
    if (pair.category == Category::kAllAboveAllBelow) {
      ++all_pairs;
      if (pair.d2 == QueryAnswerVector({0, 0, 0, 0, 0})) saw_mirror = true;
    }
  }
  EXPECT_EQ(all_pairs, 2);
  EXPECT_TRUE(saw_mirror);

  const auto& x = find_pair(pairs, Category::kXShape, 5);
  EXPECT_EQ(x.d1, QueryAnswerVector({1, 1, 0, 0, 0}));
  EXPECT_EQ(x.d2, QueryAnswerVector({0, 0, 1, 1, 1}));
}

TEST(GenerateDatabasesTest, LengthTenPatternsMatchReportedWitnessPairs) {
  const std::size_t lengths[] = {10};
  const auto pairs = generate_databases(lengths, 1.0);

  const auto& half = find_pair(pairs, Category::kHalfHalf, 10);
  EXPECT_EQ(half.d1, QueryAnswerVector({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(half.d2, QueryAnswerVector({0, 0, 0, 0, 0, 2, 2, 2, 2, 2}));

  const auto& x = find_pair(pairs, Category::kXShape, 10);
  EXPECT_EQ(x.d1, QueryAnswerVector({1, 1, 1, 1, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(x.d2, QueryAnswerVector({0, 0, 0, 0, 0, 1, 1, 1, 1, 1}));

  const auto& all = find_pair(pairs, Category::kAllAboveAllBelow, 10);
  EXPECT_EQ(all.d1, QueryAnswerVector(10, 1.0));
  EXPECT_EQ(all.d2, QueryAnswerVector(10, 2.0));
}

TEST(GenerateDatabasesTest, GeneralSensitivityScalesDeviations) {
  const std::size_t lengths[] = {5};
  const auto pairs = generate_databases(lengths, 0.5);
  const auto& all = find_pair(pairs, Category::kAllAboveAllBelow, 5);
  EXPECT_EQ(all.d2, QueryAnswerVector(5, 1.5));
  const auto& x = find_pair(pairs, Category::kXShape, 5);
  EXPECT_EQ(x.d1, QueryAnswerVector({0.5, 0.5, 0, 0, 0}));
}

TEST(GenerateDatabasesTest, EveryPairSatisfiesItsAdjacencyInvariant) {
  const std::size_t lengths[] = {2, 5, 10};
  for (const auto& pair : generate_databases(lengths, 1.0)) {
    // Re-validation must succeed.
    EXPECT_NO_THROW(AdjacentInputPair::validated(
        pair.d1, pair.d2, pair.category, pair.sensitivity));
  }
}

TEST(GenerateDatabasesTest, RejectsBadParameters) {
  const std::size_t too_short[] = {1};
  EXPECT_THROW(generate_databases(too_short, 1.0), InvalidParameterError);
  const std::size_t fine[] = {5};
  EXPECT_THROW(generate_databases(fine, 0.0), InvalidParameterError);
}

TEST(GenerateArgumentsTest, ThresholdSeparatesAllAboveLevels) {
  const auto svt = make_mechanism("svt");
  ASSERT_NE(svt, nullptr);
  const auto pair = AdjacentInputPair::validated(
      QueryAnswerVector(5, 1.0), QueryAnswerVector(5, 2.0),
      Category::kAllAboveAllBelow, 1.0);
  const MechanismArgs args = generate_arguments(*svt, pair, 0.7);
  ASSERT_TRUE(args.threshold.has_value());
  EXPECT_DOUBLE_EQ(*args.threshold, 1.5);
  EXPECT_EQ(branch_divergence(pair, *args.threshold), 5);
  ASSERT_TRUE(args.bound.has_value());
  EXPECT_EQ(*args.bound, 1);
  EXPECT_DOUBLE_EQ(args.epsilon0, 0.7);
  EXPECT_DOUBLE_EQ(args.sensitivity, 1.0);
}

TEST(GenerateArgumentsTest, NoExtraArgsForNoisyMaxAndHistogram) {
  for (const char* name : {"noisy_max_lap", "histogram"}) {
    const auto mechanism = make_mechanism(name);
    const auto pair = AdjacentInputPair::validated(
        {1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, Category::kOneAbove, 1.0);
    const MechanismArgs args = generate_arguments(*mechanism, pair, 1.5);
    EXPECT_FALSE(args.threshold.has_value());
    EXPECT_FALSE(args.bound.has_value());
    EXPECT_DOUBLE_EQ(args.epsilon0, 1.5);
  }
}

TEST(GenerateArgumentsTest, DeterministicAndGridOptimal) {
  const auto svt = make_mechanism("svt");
  const std::size_t lengths[] = {5, 10};
  for (const auto& pair : generate_databases(lengths, 1.0)) {
    const MechanismArgs a = generate_arguments(*svt, pair, 0.7);
    const MechanismArgs b = generate_arguments(*svt, pair, 0.7);
    ASSERT_EQ(a.threshold.has_value(), b.threshold.has_value());
    ASSERT_TRUE(a.threshold.has_value());
    EXPECT_DOUBLE_EQ(*a.threshold, *b.threshold);

    // Exhaustive re-scan of the candidate grid: the chosen threshold must
    // achieve the maximum divergence.
    std::set<double> values(pair.d1.begin(), pair.d1.end());
    values.insert(pair.d2.begin(), pair.d2.end());
    std::set<double> candidates;
    for (auto i = values.begin(); i != values.end(); ++i) {
      for (auto j = std::next(i); j != values.end(); ++j) {
        candidates.insert((*i + *j) / 2.0);
      }
      candidates.insert(*i - pair.sensitivity / 2.0);
      candidates.insert(*i + pair.sensitivity / 2.0);
    }
    std::int64_t best = -1;
    for (double t : candidates) {
      best = std::max(best, branch_divergence(pair, t));
    }
    EXPECT_EQ(branch_divergence(pair, *a.threshold), best)
        << category_name(pair.category) << " length " << pair.length();
  }
}

namespace {

class NeedsMysteryArg final : public Mechanism {
 public:
  std::string_view name() const override { return "mystery"; }
  Adjacency adjacency() const override { return Adjacency::kPerQuery; }
  std::vector<std::string_view> required_args() const override {
    return {"budget_split"};
  }
  OutputKind output_kind(std::size_t) const override { return {}; }
  MechanismOutput execute(const QueryAnswerVector&, const MechanismArgs&,
                          RngStream&) const override {
    return {};
  }
};

}  // namespace

TEST(GenerateArgumentsTest, UnknownArgIsReportedByName) {
  const NeedsMysteryArg mechanism;
  const auto pair = AdjacentInputPair::validated(
      {1, 1}, {2, 2}, Category::kAllAboveAllBelow, 1.0);
  try {
    generate_arguments(mechanism, pair, 1.0);
    FAIL() << "expected UnsupportedArgError";
  } catch (const UnsupportedArgError& e) {
    EXPECT_EQ(e.arg_name(), "budget_split");
  }
}

TEST(InputListTest, HistogramMechanismsGetFourTuples) {
  const auto histogram = make_mechanism("histogram");
  const auto candidates = input_list(*histogram, 0.2);
  ASSERT_EQ(candidates.size(), 4u);
  for (const auto& candidate : candidates) {
    EXPECT_EQ(category_adjacency(candidate.pair.category),
              Adjacency::kHistogram);
    EXPECT_FALSE(candidate.args.threshold.has_value());
  }
}

TEST(InputListTest, PerQueryMechanismsGetSixteenTuples) {
  // Eight category instantiations (all-above/all-below counts twice) at two
  // lengths.
  for (const char* name : {"svt", "noisy_max_lap", "isvt4"}) {
    const auto mechanism = make_mechanism(name);
    const auto candidates = input_list(*mechanism, 0.7);
    EXPECT_EQ(candidates.size(), 16u) << name;
  }
}

TEST(InputListTest, LengthsAreFiveAndTen) {
  const auto svt = make_mechanism("svt");
  std::set<std::size_t> lengths;
  for (const auto& candidate : input_list(*svt, 0.7)) {
    lengths.insert(candidate.pair.length());
  }
  EXPECT_EQ(lengths, (std::set<std::size_t>{5, 10}));
}

}  // namespace
}  // namespace dpcheck
