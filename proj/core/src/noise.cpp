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

#include "dpcheck/noise.hpp"

#include <cmath>

#include "dpcheck/error.hpp"

namespace dpcheck {
namespace {

void check_scale(double scale, const char* who) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidParameterError(std::string(who) +
                                ": scale must be a positive finite number");
  }
}

}  // namespace

double laplace_quantile(double scale, double p) {
  check_scale(scale, "laplace_quantile");
  if (!(p > 0.0) || !(p < 1.0)) {
    throw InvalidParameterError("laplace_quantile: p must lie in (0, 1)");
  }
  const double u = p - 0.5;
  // -scale * sign(u) * log(1 - 2|u|), written with log1p for accuracy near 0.
  return u < 0.0 ? scale * std::log1p(2.0 * u) : -scale * std::log1p(-2.0 * u);
}

double exponential_quantile(double scale, double p) {
  check_scale(scale, "exponential_quantile");
  if (!(p >= 0.0) || !(p < 1.0)) {
    throw InvalidParameterError("exponential_quantile: p must lie in [0, 1)");
  }
  return -scale * std::log1p(-p);
}

double laplace_sample(double scale, RngStream& rng) {
  double p = rng.uniform01();  // [0, 1)
  if (p == 0.0) p = 0x1.0p-53;  // avoid the -inf endpoint
  return laplace_quantile(scale, p);
}

double exponential_sample(double scale, RngStream& rng) {
  return exponential_quantile(scale, rng.uniform01());
}

}  // namespace dpcheck
