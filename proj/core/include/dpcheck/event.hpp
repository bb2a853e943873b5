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

#ifndef DPCHECK_EVENT_HPP_
#define DPCHECK_EVENT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "dpcheck/types.hpp"

namespace dpcheck {

// A declarative predicate over mechanism outputs. Events are what the
// detector reports as the "bad output set" of a counterexample, so they are
// kept small, comparable, and serializable.
//
// Interval bounds are open on both ends and may be +/-infinity. Hamming
// shells are relative to a reference output (the noiseless run); the
// reference travels separately so that millions of candidate events can
// share it.
struct Event {
  enum class Kind : std::uint8_t {
    kHammingShell,     // hamming distance to the reference equals k
    kLengthIs,         // output length equals k
    kCountOfValueIs,   // occurrences of `value` equal k
    kCoordInInterval,  // numeric entry at `coord` lies in (lo, hi)
    kCoordEquals,      // numeric entry at `coord` equals the integer k
    kAggInInterval,    // avg/min/max of numeric entries lies in (lo, hi)
    kProduct,          // count(value) == k AND numeric part in (lo, hi)
  };

  enum class Aggregate : std::uint8_t { kAvg, kMin, kMax };

  // Selector for the numeric side of interval and product events.
  struct NumericSelector {
    bool is_aggregate = false;
    std::int32_t coord = 0;
    Aggregate aggregate = Aggregate::kAvg;
  };

  Kind kind = Kind::kHammingShell;
  std::int32_t k = 0;        // hamming / length / count / equals target
  Sym value = kSymFalse;     // count-of-value and product categorical part
  NumericSelector selector;  // numeric part
  double lo = 0.0;
  double hi = 0.0;

  static Event hamming_shell(std::int32_t k);
  static Event length_is(std::int32_t k);
  static Event count_of_value(Sym value, std::int32_t k);
  static Event coord_in(std::int32_t coord, double lo, double hi);
  static Event coord_equals(std::int32_t coord, std::int32_t k);
  static Event agg_in(Aggregate aggregate, double lo, double hi);
  // count(value) == k combined with a numeric-part interval.
  static Event product(Sym value, std::int32_t k, NumericSelector selector,
                       double lo, double hi);
};

// Hamming distance between two outputs: mismatched positions over the
// common prefix plus the length difference. Total for any pair of outputs,
// and the usual entrywise distance when lengths agree.
std::int64_t hamming_distance(const MechanismOutput& a,
                              const MechanismOutput& b);

// Value of the numeric selector on an output, if defined: the entry at
// `coord` when present and numeric, or the aggregate over all numeric
// entries when there is at least one.
std::optional<double> numeric_selector_value(const Event::NumericSelector& sel,
                                             const MechanismOutput& output);

// Pure membership test. `reference` is consulted only by hamming events.
bool event_contains(const Event& event, const MechanismOutput& output,
                    const MechanismOutput& reference);

// An event bound to the reference output it was generated against; this is
// the self-contained predicate the detector re-tests with fresh samples.
struct BoundEvent {
  Event event;
  MechanismOutput reference;

  bool contains(const MechanismOutput& output) const {
    return event_contains(event, output, reference);
  }
};

// Compact textual form, e.g. "hamming=9", "coord[0]in(-inf,1.0)",
// "count(False)=9&coord[9]in(-2.4,2.4)". See the README for the grammar.
std::string format_event(const Event& event);

}  // namespace dpcheck

#endif  // DPCHECK_EVENT_HPP_
