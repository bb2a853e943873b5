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

#ifndef DPCHECK_NOISE_HPP_
#define DPCHECK_NOISE_HPP_

#include "dpcheck/rng.hpp"

namespace dpcheck {

// Inverse CDF of Laplace(0, scale) at p in (0, 1):
//   x = -scale * sign(u) * ln(1 - 2|u|)   with u = p - 1/2.
// Throws InvalidParameterError unless scale > 0 and 0 < p < 1.
double laplace_quantile(double scale, double p);

// Inverse CDF of Exponential with mean `scale` at p in [0, 1).
// Throws InvalidParameterError unless scale > 0 and 0 <= p < 1.
double exponential_quantile(double scale, double p);

// One draw from Laplace(0, scale), density exp(-|x|/scale) / (2*scale).
// Exactly one uniform is consumed per draw, which keeps derived streams
// aligned across call sites.
//
// Throws InvalidParameterError if scale is not a positive finite number.
double laplace_sample(double scale, RngStream& rng);

// One draw from Exponential with mean `scale` (support [0, inf)).
// Same single-uniform inverse CDF scheme as laplace_sample.
//
// Throws InvalidParameterError if scale is not a positive finite number.
double exponential_sample(double scale, RngStream& rng);

}  // namespace dpcheck

#endif  // DPCHECK_NOISE_HPP_
