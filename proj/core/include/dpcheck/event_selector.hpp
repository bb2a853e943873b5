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

#ifndef DPCHECK_EVENT_SELECTOR_HPP_
#define DPCHECK_EVENT_SELECTOR_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "dpcheck/event.hpp"
#include "dpcheck/input_generator.hpp"
#include "dpcheck/rng.hpp"
#include "dpcheck/stats.hpp"
#include "dpcheck/types.hpp"

namespace dpcheck {

// Observed output shape, inferred by sampling. Lengths that vary across
// samples make the kind variable; seeing both categorical and numeric atoms
// makes it mixed.
//
// Throws InvalidParameterError given fewer than two samples or samples with
// no atoms at all.
OutputKind classify_output_kind(std::span<const MechanismOutput> samples);

// Everything the search-space builder needs to know about the sampled
// outputs: the classified kind, the event size bound, the categorical
// alphabet, and the numeric value range.
struct OutputProfile {
  OutputKind kind;
  // Upper bound for shell/length/count targets and coordinate indices: the
  // fixed output length, or the input length for variable outputs.
  std::size_t length_bound = 0;
  std::vector<Sym> alphabet;  // observed categorical values, ascending
  bool has_numeric = false;
  double numeric_min = 0.0;
  double numeric_max = 0.0;
  bool integer_valued = false;  // every numeric atom was an integer
};

OutputProfile profile_outputs(std::span<const MechanismOutput> side1,
                              std::span<const MechanismOutput> side2,
                              std::size_t input_length);

// Interval endpoints: multiples of `step` covering the observed numeric
// range (snapped outward to the grid), with -inf and +inf added at the ends.
std::vector<double> interval_bounds(double numeric_min, double numeric_max,
                                    double step);

// Builds the candidate event list for the profile, in deterministic order:
//
//   categorical: hamming shells 0..L, then (variable only) lengths 0..L,
//                then per-alphabet-value counts 0..L;
//   numeric:     (variable only) lengths 0..L, then per-coordinate interval
//                events over all endpoint pairs (or integer equality events
//                when every observed value was an integer), then avg/min/max
//                interval events;
//   mixed:       per-alphabet-value count k crossed with every numeric
//                coordinate/aggregate interval event.
std::vector<Event> build_search_space(const OutputProfile& profile,
                                      double grid_step);

struct SelectionOptions {
  std::int64_t n_select = 100000;
  unsigned workers = 0;
  int resamples = stats::kDefaultResamples;
  double grid_step = 0.2;
};

// The chosen witness: input pair, grounded args, event, and its exploratory
// score (the selection-phase min p-value, computed on exploration samples).
struct SelectionResult {
  AdjacentInputPair pair;
  MechanismArgs args;
  BoundEvent event;
  double exploratory_pvalue = 1.0;
  std::int64_t c1 = 0;  // exploration-phase membership counts
  std::int64_t c2 = 0;
  std::size_t input_index = 0;  // index of the winning candidate tuple
};

// Runs the mechanism options.n_select times per side for every candidate
// input, scores every event in the search space by min(p_top, p_bot), and
// returns the global minimizer. Events whose combined membership count
// falls below 0.001 * n_select * e^epsilon are skipped as too noisy to
// score. Ties break to the earliest candidate, then the earliest event in
// generation order.
//
// Exploration uses streams in phases kSelectionRun/kSelectionScore only, so
// a subsequent hypothesis_test with the same SeedContext sees fresh samples.
//
// Throws InvalidParameterError on an empty input list and
// NoCandidateEventError when the frequency filter rejects every event.
SelectionResult select_event(const Mechanism& mechanism, double test_epsilon,
                             std::span<const InputCandidate> input_list,
                             const SeedContext& seeds,
                             const SelectionOptions& options);

}  // namespace dpcheck

#endif  // DPCHECK_EVENT_SELECTOR_HPP_
