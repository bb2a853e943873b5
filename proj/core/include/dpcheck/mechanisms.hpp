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

#ifndef DPCHECK_MECHANISMS_HPP_
#define DPCHECK_MECHANISMS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dpcheck/types.hpp"

namespace dpcheck {

// The built-in mechanisms under test. Registry names are the vocabulary the
// command line accepts:
//
//   noisy_max_lap         report-noisy-max, Laplace(2/eps0) noise, argmax index
//   noisy_max_exp         same with Exponential(2/eps0) noise
//   noisy_max_lap_value   broken variant returning the max noisy value
//   noisy_max_exp_value   broken variant returning the max noisy value
//   histogram             per-cell Laplace(1/eps0) noise
//   histogram_wrong_scale broken variant with Laplace(eps0) noise
//   svt                   sparse vector: noisy threshold, noisy queries,
//                         halts after `bound` above-threshold answers
//   isvt1                 broken svt: no query noise, no halting bound
//   isvt2                 broken svt: query noise not split, no halting bound
//   isvt3                 broken svt: query noise does not scale with bound
//   isvt4                 broken svt: leaks the noisy answer when above
//
// All take the claimed budget via args.epsilon0; the svt family additionally
// consumes args.threshold, args.sensitivity and (where it halts) args.bound.
using MechanismFactory = std::function<std::unique_ptr<Mechanism>()>;

struct MechanismRegistryEntry {
  std::string_view name;
  MechanismFactory factory;
};

// Registry in canonical (stable) order.
const std::vector<MechanismRegistryEntry>& mechanism_registry();

std::vector<std::string_view> mechanism_names();

// Constructs a registered mechanism; returns nullptr for unknown names.
std::unique_ptr<Mechanism> make_mechanism(std::string_view name);

}  // namespace dpcheck

#endif  // DPCHECK_MECHANISMS_HPP_
