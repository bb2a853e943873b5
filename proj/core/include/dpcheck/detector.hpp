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

#ifndef DPCHECK_DETECTOR_HPP_
#define DPCHECK_DETECTOR_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpcheck/event.hpp"
#include "dpcheck/event_selector.hpp"
#include "dpcheck/types.hpp"

namespace dpcheck {

// Configuration for a detection run. `test_epsilons` is the grid of privacy
// levels to test the mechanism's epsilon0 claim against.
struct DetectionConfig {
  std::string mechanism;
  double epsilon0 = 1.0;
  std::vector<double> test_epsilons;
  std::int64_t n_detect = 500000;  // iterations per side, final test
  std::int64_t n_select = 100000;  // iterations per side, event selection
  int resamples = 10;              // thinning draws averaged per p-value
  double alpha = 0.05;             // advisory significance threshold
  std::uint64_t seed = 1;
  unsigned workers = 0;  // 0 = all hardware threads
  double grid_step = 0.2;
  double sensitivity = 1.0;

  // Throws ConfigError on out-of-range fields or a non-increasing grid.
  void validate() const;

  // The grid used when the caller picks none: 0.05 to epsilon0 + 1.5 in
  // steps of 0.1.
  static std::vector<double> default_grid(double epsilon0);
};

// Outcome of one grid point. When `error` is non-empty the point failed and
// every other field except test_epsilon is unspecified.
struct DetectionResult {
  double test_epsilon = 0.0;
  std::string error;

  AdjacentInputPair pair;
  MechanismArgs args;
  BoundEvent event;
  double exploratory_pvalue = 1.0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t n = 0;
  double p_top = 1.0;
  double p_bot = 1.0;
  double seconds = 0.0;

  bool ok() const { return error.empty(); }
  double min_p() const { return p_top < p_bot ? p_top : p_bot; }
};

// Runs the full pipeline for a single test epsilon: generate candidate
// inputs, select the most promising (input, event) witness, then re-test it
// on fresh samples. `point_index` keys this point's random streams; a sweep
// passes the grid index.
DetectionResult detect(const Mechanism& mechanism,
                       const DetectionConfig& config, double test_epsilon,
                       std::uint64_t point_index = 0);

// Maps detect() over the test grid. Per-point failures are recorded in the
// returned results and the sweep continues. `on_point`, when set, is called
// after each grid point (progress reporting).
using SweepObserver = std::function<void(const DetectionResult&)>;
std::vector<DetectionResult> sweep(const Mechanism& mechanism,
                                   const DetectionConfig& config,
                                   const SweepObserver& on_point = {});

// Advisory verdict: whether a violation was detected at the claimed budget
// (min_p < alpha at test_epsilon == epsilon0). Empty when the claimed
// budget is not on the grid or that point failed.
std::optional<bool> violation_at_claimed_budget(
    const DetectionConfig& config, std::span<const DetectionResult> results);

// Report serialization. Both forms are deterministic functions of the
// config, seed and results; the worker count is deliberately not echoed
// because it cannot affect any result. Failed points are omitted from the
// CSV rows (they carry no counts) and listed under "errors" in JSON.
std::string report_csv(const DetectionConfig& config,
                       std::span<const DetectionResult> results);
std::string report_json(const DetectionConfig& config,
                        std::span<const DetectionResult> results);

}  // namespace dpcheck

#endif  // DPCHECK_DETECTOR_HPP_
