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

#include "dpcheck/types.hpp"

#include <cmath>
#include <cstdlib>

#include "dpcheck/error.hpp"

namespace dpcheck {

std::string_view category_name(Category category) {
  switch (category) {
    case Category::kOneAbove:
      return "one_above";
    case Category::kOneBelow:
      return "one_below";
    case Category::kOneAboveRestBelow:
      return "one_above_rest_below";
    case Category::kOneBelowRestAbove:
      return "one_below_rest_above";
    case Category::kHalfHalf:
      return "half_half";
    case Category::kAllAboveAllBelow:
      return "all_above_all_below";
    case Category::kXShape:
      return "x_shape";
  }
  return "unknown";
}

Adjacency category_adjacency(Category category) {
  switch (category) {
    case Category::kOneAbove:
    case Category::kOneBelow:
      return Adjacency::kHistogram;
    default:
      return Adjacency::kPerQuery;
  }
}

AdjacentInputPair AdjacentInputPair::validated(QueryAnswerVector d1,
                                               QueryAnswerVector d2,
                                               Category category,
                                               double sensitivity) {
  if (d1.empty() || d1.size() != d2.size()) {
    throw InvalidParameterError(
        "adjacent pair: vectors must be non-empty and of equal length");
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw InvalidParameterError("adjacent pair: sensitivity must be positive");
  }
  const double tol = sensitivity * 1e-12;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < d1.size(); ++i) {
    if (!std::isfinite(d1[i]) || !std::isfinite(d2[i])) {
      throw InvalidParameterError("adjacent pair: entries must be finite");
    }
    const double diff = std::abs(d1[i] - d2[i]);
    if (diff > sensitivity + tol) {
      throw InvalidParameterError(
          "adjacent pair: coordinate deviation exceeds sensitivity");
    }
    if (diff > 0.0) ++differing;
  }
  if (category_adjacency(category) == Adjacency::kHistogram &&
      differing != 1) {
    throw InvalidParameterError(
        "adjacent pair: histogram adjacency requires exactly one differing "
        "coordinate");
  }
  return AdjacentInputPair{std::move(d1), std::move(d2), category,
                           sensitivity};
}

std::string output_kind_name(const OutputKind& kind) {
  std::string name =
      kind.arity == OutputKind::Arity::kFixed ? "fixed-" : "variable-";
  switch (kind.atoms) {
    case OutputKind::Atoms::kCategorical:
      name += "categorical";
      break;
    case OutputKind::Atoms::kNumeric:
      name += "numeric";
      break;
    case OutputKind::Atoms::kMixed:
      name += "mixed";
      break;
  }
  return name;
}

}  // namespace dpcheck
