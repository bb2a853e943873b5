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

#ifndef DPCHECK_INPUT_GENERATOR_HPP_
#define DPCHECK_INPUT_GENERATOR_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "dpcheck/types.hpp"

namespace dpcheck {

// One candidate input for the event selector: an adjacent pair and fully
// grounded mechanism arguments.
struct InputCandidate {
  AdjacentInputPair pair;
  MechanismArgs args;
};

// The lengths candidate inputs are instantiated at. Short inputs keep
// counterexamples readable and executions fast.
inline constexpr std::size_t kInputLengths[] = {5, 10};

// Instantiates every adjacency category at each requested length. The
// baseline vector is all ones; deviations are +/- sensitivity per category
// (the x-shape category deviates around zero instead). Order is
// deterministic: lengths as given, categories in declaration order.
std::vector<AdjacentInputPair> generate_databases(
    std::span<const std::size_t> lengths, double sensitivity);

// Grounds mechanism arguments for one candidate pair.
//
// Noise-scaling parameters get the value minimizing noise (bound = 1).
// Branch parameters (the threshold) are chosen by scanning a finite
// candidate grid -- midpoints of distinct observed answers plus the answers
// offset by half the sensitivity -- and keeping the value that makes the
// noise-free above/below-threshold outcomes diverge on the most queries.
// Ties go to the smallest candidate, so the search is deterministic.
//
// Throws UnsupportedArgError when the mechanism requires an argument this
// generator does not know how to ground.
MechanismArgs generate_arguments(const Mechanism& mechanism,
                                 const AdjacentInputPair& pair,
                                 double epsilon0);

// Number of queries on which the noise-free above/below-threshold outcomes
// differ between the two sides. Exposed so tests can re-verify that the
// chosen threshold is grid-optimal.
std::int64_t branch_divergence(const AdjacentInputPair& pair,
                               double threshold);

// The full candidate list: categories filtered to the mechanism's adjacency
// notion (histogram mechanisms see only the single-coordinate categories),
// instantiated at the standard lengths, each with grounded arguments.
std::vector<InputCandidate> input_list(const Mechanism& mechanism,
                                       double epsilon0,
                                       double sensitivity = 1.0);

}  // namespace dpcheck

#endif  // DPCHECK_INPUT_GENERATOR_HPP_
