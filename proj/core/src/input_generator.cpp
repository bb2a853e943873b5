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
#include <cmath>
#include <set>
#include <string>

#include "dpcheck/error.hpp"

namespace dpcheck {
namespace {

AdjacentInputPair make_pair(Category category, std::size_t length,
                            double sensitivity) {
  QueryAnswerVector d1(length, 1.0);
  QueryAnswerVector d2(length, 1.0);
  const double up = 1.0 + sensitivity;
  const double down = 1.0 - sensitivity;
  switch (category) {
    case Category::kOneAbove:
      d2[0] = up;
      break;
    case Category::kOneBelow:
      d2[0] = down;
      break;
    case Category::kOneAboveRestBelow:
      d2.assign(length, down);
      d2[0] = up;
      break;
    case Category::kOneBelowRestAbove:
      d2.assign(length, up);
      d2[0] = down;
      break;
    case Category::kHalfHalf: {
      // First half (rounded up) moves down, the rest moves up.
      const std::size_t split = (length + 1) / 2;
      for (std::size_t i = 0; i < length; ++i) d2[i] = i < split ? down : up;
      break;
    }
    case Category::kAllAboveAllBelow:
      d2.assign(length, up);
      break;
    case Category::kXShape: {
      // d1 steps from high to low, d2 is its mirror image.
      const std::size_t split = length / 2;
      for (std::size_t i = 0; i < length; ++i) {
        d1[i] = i < split ? sensitivity : 0.0;
        d2[i] = i < split ? 0.0 : sensitivity;
      }
      break;
    }
  }
  return AdjacentInputPair::validated(std::move(d1), std::move(d2), category,
                                      sensitivity);
}

}  // namespace

std::vector<AdjacentInputPair> generate_databases(
    std::span<const std::size_t> lengths, double sensitivity) {
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw InvalidParameterError(
        "generate_databases: sensitivity must be positive");
  }
  std::vector<AdjacentInputPair> pairs;
  pairs.reserve(lengths.size() * (std::size(kAllCategories) + 1));
  for (std::size_t length : lengths) {
    if (length < 2) {
      throw InvalidParameterError(
          "generate_databases: lengths must be at least 2");
    }
    for (Category category : kAllCategories) {
      pairs.push_back(make_pair(category, length, sensitivity));
      if (category == Category::kAllAboveAllBelow) {
        // The category covers both directions: the canonical sample moves
        // every answer up, its mirror moves every answer down.
        QueryAnswerVector d1(length, 1.0);
        QueryAnswerVector d2(length, 1.0 - sensitivity);
        pairs.push_back(AdjacentInputPair::validated(
            std::move(d1), std::move(d2), category, sensitivity));
      }
    }
  }
  return pairs;
}

std::int64_t branch_divergence(const AdjacentInputPair& pair,
                               double threshold) {
  std::int64_t diverging = 0;
  for (std::size_t i = 0; i < pair.length(); ++i) {
    const bool above1 = pair.d1[i] >= threshold;
    const bool above2 = pair.d2[i] >= threshold;
    if (above1 != above2) ++diverging;
  }
  return diverging;
}

MechanismArgs generate_arguments(const Mechanism& mechanism,
                                 const AdjacentInputPair& pair,
                                 double epsilon0) {
  MechanismArgs args;
  args.epsilon0 = epsilon0;
  args.sensitivity = pair.sensitivity;

  bool wants_threshold = false;
  for (std::string_view required : mechanism.required_args()) {
    if (required == "threshold") {
      wants_threshold = true;
    } else if (required == "bound") {
      // Noise scales grow with the bound, so the noise-minimizing value is 1.
      args.bound = 1;
    } else {
      throw UnsupportedArgError(
          std::string(required),
          "generate_arguments: mechanism '" + std::string(mechanism.name()) +
              "' requires argument '" + std::string(required) +
              "' which the input generator cannot ground");
    }
  }
  if (!wants_threshold) return args;

  // Candidate thresholds: midpoints of every distinct answer pair, plus each
  // answer shifted by half the sensitivity. Any threshold between the same
  // two consecutive answers produces the same branch pattern, so this grid
  // realizes every achievable divergence count.
  std::set<double> distinct(pair.d1.begin(), pair.d1.end());
  distinct.insert(pair.d2.begin(), pair.d2.end());
  const std::vector<double> values(distinct.begin(), distinct.end());
  std::set<double> candidate_set;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      candidate_set.insert((values[i] + values[j]) / 2.0);
    }
    candidate_set.insert(values[i] - pair.sensitivity / 2.0);
    candidate_set.insert(values[i] + pair.sensitivity / 2.0);
  }

  double best_threshold = 0.0;
  std::int64_t best_divergence = -1;
  for (double candidate : candidate_set) {
    const std::int64_t diverging = branch_divergence(pair, candidate);
    if (diverging > best_divergence) {
      best_divergence = diverging;
      best_threshold = candidate;
    }
  }
  args.threshold = best_threshold;
  return args;
}

std::vector<InputCandidate> input_list(const Mechanism& mechanism,
                                       double epsilon0, double sensitivity) {
  std::vector<InputCandidate> candidates;
  for (AdjacentInputPair& pair :
       generate_databases(kInputLengths, sensitivity)) {
    if (mechanism.adjacency() == Adjacency::kHistogram &&
        category_adjacency(pair.category) != Adjacency::kHistogram) {
      continue;
    }
    MechanismArgs args = generate_arguments(mechanism, pair, epsilon0);
    candidates.push_back(InputCandidate{std::move(pair), std::move(args)});
  }
  return candidates;
}

}  // namespace dpcheck
