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

#include "dpcheck/event_selector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "dpcheck/error.hpp"
#include "dpcheck/parallel.hpp"
#include "dpcheck/runner.hpp"

namespace dpcheck {
namespace {

// Shared accumulator for classification and profiling.
struct OutputScan {
  bool any = false;
  bool lengths_vary = false;
  std::size_t first_length = 0;
  std::size_t max_length = 0;
  bool saw_categorical = false;
  bool saw_numeric = false;
  std::vector<Sym> alphabet;
  double numeric_min = std::numeric_limits<double>::infinity();
  double numeric_max = -std::numeric_limits<double>::infinity();
  bool integer_valued = true;

  void absorb(const MechanismOutput& output) {
    if (!any) {
      first_length = output.size();
      any = true;
    } else if (output.size() != first_length) {
      lengths_vary = true;
    }
    max_length = std::max(max_length, output.size());
    for (const Atom& atom : output.entries) {
      if (atom.is_numeric()) {
        saw_numeric = true;
        numeric_min = std::min(numeric_min, atom.num);
        numeric_max = std::max(numeric_max, atom.num);
        if (atom.num != std::floor(atom.num)) integer_valued = false;
      } else {
        saw_categorical = true;
        auto it =
            std::lower_bound(alphabet.begin(), alphabet.end(), atom.sym);
        if (it == alphabet.end() || *it != atom.sym) {
          alphabet.insert(it, atom.sym);
        }
      }
    }
  }

  OutputKind kind() const {
    OutputKind k;
    k.arity = lengths_vary ? OutputKind::Arity::kVariable
                           : OutputKind::Arity::kFixed;
    k.length = lengths_vary ? 0 : first_length;
    k.atoms = saw_categorical && saw_numeric ? OutputKind::Atoms::kMixed
              : saw_numeric                  ? OutputKind::Atoms::kNumeric
                                             : OutputKind::Atoms::kCategorical;
    return k;
  }
};

}  // namespace

OutputKind classify_output_kind(std::span<const MechanismOutput> samples) {
  if (samples.size() < 2) {
    throw InvalidParameterError(
        "classify_output_kind: need at least two sample outputs");
  }
  OutputScan scan;
  for (const MechanismOutput& output : samples) scan.absorb(output);
  if (!scan.saw_categorical && !scan.saw_numeric) {
    throw InvalidParameterError(
        "classify_output_kind: samples contain no output entries");
  }
  return scan.kind();
}

OutputProfile profile_outputs(std::span<const MechanismOutput> side1,
                              std::span<const MechanismOutput> side2,
                              std::size_t input_length) {
  if (side1.size() + side2.size() < 2) {
    throw InvalidParameterError(
        "profile_outputs: need at least two sample outputs");
  }
  OutputScan scan;
  for (const MechanismOutput& output : side1) scan.absorb(output);
  for (const MechanismOutput& output : side2) scan.absorb(output);
  if (!scan.saw_categorical && !scan.saw_numeric) {
    throw InvalidParameterError(
        "profile_outputs: samples contain no output entries");
  }

  OutputProfile profile;
  profile.kind = scan.kind();
  profile.length_bound = profile.kind.arity == OutputKind::Arity::kFixed
                             ? profile.kind.length
                             : std::max(input_length, scan.max_length);
  profile.alphabet = std::move(scan.alphabet);
  profile.has_numeric = scan.saw_numeric;
  if (scan.saw_numeric) {
    profile.numeric_min = scan.numeric_min;
    profile.numeric_max = scan.numeric_max;
    profile.integer_valued = scan.integer_valued;
  }
  return profile;
}

std::vector<double> interval_bounds(double numeric_min, double numeric_max,
                                    double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw InvalidParameterError("interval_bounds: step must be positive");
  }
  const auto m_lo = static_cast<std::int64_t>(std::floor(numeric_min / step));
  const auto m_hi = static_cast<std::int64_t>(std::ceil(numeric_max / step));
  std::vector<double> bounds;
  bounds.reserve(static_cast<std::size_t>(m_hi - m_lo) + 3);
  bounds.push_back(-std::numeric_limits<double>::infinity());
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    bounds.push_back(static_cast<double>(m) * step);
  }
  bounds.push_back(std::numeric_limits<double>::infinity());
  return bounds;
}

std::vector<Event> build_search_space(const OutputProfile& profile,
                                      double grid_step) {
  const auto length_bound = static_cast<std::int32_t>(profile.length_bound);
  const bool variable =
      profile.kind.arity == OutputKind::Arity::kVariable;
  std::vector<Event> events;

  const auto add_length_events = [&] {
    for (std::int32_t k = 0; k <= length_bound; ++k) {
      events.push_back(Event::length_is(k));
    }
  };

  // Numeric sub-events shared by the pure-numeric and mixed cases:
  // one interval per coordinate and endpoint pair, then per aggregate.
  std::vector<Event> numeric_parts;
  if (profile.has_numeric) {
    const std::vector<double> bounds =
        interval_bounds(profile.numeric_min, profile.numeric_max, grid_step);
    const bool use_equality =
        profile.integer_valued &&
        profile.kind.atoms == OutputKind::Atoms::kNumeric;
    for (std::int32_t coord = 0; coord < length_bound; ++coord) {
      if (use_equality) {
        const auto k_lo = static_cast<std::int32_t>(profile.numeric_min);
        const auto k_hi = static_cast<std::int32_t>(profile.numeric_max);
        for (std::int32_t k = k_lo; k <= k_hi; ++k) {
          numeric_parts.push_back(Event::coord_equals(coord, k));
        }
      } else {
        for (std::size_t a = 0; a < bounds.size(); ++a) {
          for (std::size_t b = a + 1; b < bounds.size(); ++b) {
            numeric_parts.push_back(
                Event::coord_in(coord, bounds[a], bounds[b]));
          }
        }
      }
    }
    for (Event::Aggregate agg : {Event::Aggregate::kAvg,
                                 Event::Aggregate::kMin,
                                 Event::Aggregate::kMax}) {
      for (std::size_t a = 0; a < bounds.size(); ++a) {
        for (std::size_t b = a + 1; b < bounds.size(); ++b) {
          numeric_parts.push_back(Event::agg_in(agg, bounds[a], bounds[b]));
        }
      }
    }
  }

  switch (profile.kind.atoms) {
    case OutputKind::Atoms::kCategorical: {
      for (std::int32_t k = 0; k <= length_bound; ++k) {
        events.push_back(Event::hamming_shell(k));
      }
      if (variable) add_length_events();
      for (Sym value : profile.alphabet) {
        for (std::int32_t k = 0; k <= length_bound; ++k) {
          events.push_back(Event::count_of_value(value, k));
        }
      }
      break;
    }
    case OutputKind::Atoms::kNumeric: {
      if (variable) add_length_events();
      events.insert(events.end(), numeric_parts.begin(), numeric_parts.end());
      break;
    }
    case OutputKind::Atoms::kMixed: {
      // Cross product: categorical count condition x numeric condition.
      events.reserve(profile.alphabet.size() *
                     static_cast<std::size_t>(length_bound + 1) *
                     numeric_parts.size());
      for (Sym value : profile.alphabet) {
        for (std::int32_t k = 0; k <= length_bound; ++k) {
          for (const Event& part : numeric_parts) {
            events.push_back(
                Event::product(value, k, part.selector, part.lo, part.hi));
          }
        }
      }
      break;
    }
  }
  return events;
}

namespace {

// Per-side count tables. Every event's membership count is a histogram
// lookup or a pair of binary searches, so scoring a few million candidate
// events over 10^5 stored outputs stays cheap.
struct GroupNumeric {
  std::vector<std::vector<double>> coord_values;
  std::array<std::vector<double>, 3> agg_values;
};

struct SideTables {
  std::int64_t n = 0;
  std::vector<std::int64_t> hamming_hist;
  std::vector<std::int64_t> length_hist;
  std::vector<std::vector<std::int64_t>> count_hist;  // [alphabet][k]
  GroupNumeric whole;  // numeric values regardless of categorical counts
  // [alphabet][count k] -> numeric values of samples with that count.
  std::vector<std::vector<GroupNumeric>> groups;
};

std::size_t alphabet_index(const std::vector<Sym>& alphabet, Sym value) {
  return static_cast<std::size_t>(
      std::lower_bound(alphabet.begin(), alphabet.end(), value) -
      alphabet.begin());
}

void push_numeric(GroupNumeric& group, const MechanismOutput& output,
                  std::size_t coord_bound) {
  double sum = 0.0;
  double mn = std::numeric_limits<double>::infinity();
  double mx = -std::numeric_limits<double>::infinity();
  std::int64_t numeric_count = 0;
  for (std::size_t i = 0; i < output.size(); ++i) {
    const Atom& atom = output.entries[i];
    if (!atom.is_numeric()) continue;
    if (i < coord_bound) group.coord_values[i].push_back(atom.num);
    ++numeric_count;
    sum += atom.num;
    mn = std::min(mn, atom.num);
    mx = std::max(mx, atom.num);
  }
  if (numeric_count > 0) {
    group.agg_values[0].push_back(sum / static_cast<double>(numeric_count));
    group.agg_values[1].push_back(mn);
    group.agg_values[2].push_back(mx);
  }
}

void sort_numeric(GroupNumeric& group) {
  for (auto& values : group.coord_values) std::sort(values.begin(), values.end());
  for (auto& values : group.agg_values) std::sort(values.begin(), values.end());
}

SideTables build_tables(std::span<const MechanismOutput> samples,
                        const OutputProfile& profile,
                        const MechanismOutput& reference) {
  const std::size_t bound = profile.length_bound;
  const bool categorical =
      profile.kind.atoms == OutputKind::Atoms::kCategorical;
  const bool mixed = profile.kind.atoms == OutputKind::Atoms::kMixed;

  SideTables tables;
  tables.n = static_cast<std::int64_t>(samples.size());
  tables.hamming_hist.assign(bound + 2, 0);
  tables.length_hist.assign(bound + 2, 0);
  tables.count_hist.assign(profile.alphabet.size(),
                           std::vector<std::int64_t>(bound + 2, 0));
  if (profile.has_numeric) {
    tables.whole.coord_values.resize(bound);
    if (mixed) {
      tables.groups.assign(profile.alphabet.size(), {});
      for (auto& per_k : tables.groups) {
        per_k.resize(bound + 2);
        for (auto& group : per_k) group.coord_values.resize(bound);
      }
    }
  }

  const auto clamp_bucket = [&](std::int64_t v) {
    return static_cast<std::size_t>(
        std::clamp<std::int64_t>(v, 0, static_cast<std::int64_t>(bound) + 1));
  };

  std::vector<std::int64_t> sym_counts(profile.alphabet.size());
  for (const MechanismOutput& output : samples) {
    ++tables.length_hist[clamp_bucket(
        static_cast<std::int64_t>(output.size()))];
    if (categorical) {
      ++tables.hamming_hist[clamp_bucket(
          hamming_distance(output, reference))];
    }
    if (!profile.alphabet.empty()) {
      std::fill(sym_counts.begin(), sym_counts.end(), 0);
      for (const Atom& atom : output.entries) {
        if (!atom.is_numeric()) {
          ++sym_counts[alphabet_index(profile.alphabet, atom.sym)];
        }
      }
      for (std::size_t s = 0; s < sym_counts.size(); ++s) {
        ++tables.count_hist[s][clamp_bucket(sym_counts[s])];
      }
    }
    if (profile.has_numeric) {
      push_numeric(tables.whole, output, bound);
      if (mixed) {
        for (std::size_t s = 0; s < sym_counts.size(); ++s) {
          push_numeric(tables.groups[s][clamp_bucket(sym_counts[s])], output,
                       bound);
        }
      }
    }
  }

  sort_numeric(tables.whole);
  for (auto& per_k : tables.groups) {
    for (auto& group : per_k) sort_numeric(group);
  }
  return tables;
}

std::int64_t count_open_interval(const std::vector<double>& sorted, double lo,
                                 double hi) {
  // # { lo < x < hi }
  const auto first = std::upper_bound(sorted.begin(), sorted.end(), lo);
  const auto last = std::lower_bound(sorted.begin(), sorted.end(), hi);
  return last > first ? last - first : 0;
}

std::int64_t count_numeric_part(const GroupNumeric& group, const Event& event,
                                bool equality) {
  const auto& sel = event.selector;
  if (sel.is_aggregate) {
    const auto& values =
        group.agg_values[static_cast<std::size_t>(sel.aggregate)];
    return count_open_interval(values, event.lo, event.hi);
  }
  const auto coord = static_cast<std::size_t>(sel.coord);
  if (coord >= group.coord_values.size()) return 0;
  const auto& values = group.coord_values[coord];
  if (equality) {
    const double target = static_cast<double>(event.k);
    const auto range = std::equal_range(values.begin(), values.end(), target);
    return range.second - range.first;
  }
  return count_open_interval(values, event.lo, event.hi);
}

std::int64_t count_in(const SideTables& tables,
                      const std::vector<Sym>& alphabet, const Event& event) {
  switch (event.kind) {
    case Event::Kind::kHammingShell:
      return event.k >= 0 &&
                     static_cast<std::size_t>(event.k) <
                         tables.hamming_hist.size()
                 ? tables.hamming_hist[static_cast<std::size_t>(event.k)]
                 : 0;
    case Event::Kind::kLengthIs:
      return event.k >= 0 &&
                     static_cast<std::size_t>(event.k) <
                         tables.length_hist.size()
                 ? tables.length_hist[static_cast<std::size_t>(event.k)]
                 : 0;
    case Event::Kind::kCountOfValueIs: {
      const std::size_t s = alphabet_index(alphabet, event.value);
      return event.k >= 0 && s < tables.count_hist.size() &&
                     static_cast<std::size_t>(event.k) <
                         tables.count_hist[s].size()
                 ? tables.count_hist[s][static_cast<std::size_t>(event.k)]
                 : 0;
    }
    case Event::Kind::kCoordInInterval:
    case Event::Kind::kAggInInterval:
      return count_numeric_part(tables.whole, event, /*equality=*/false);
    case Event::Kind::kCoordEquals:
      return count_numeric_part(tables.whole, event, /*equality=*/true);
    case Event::Kind::kProduct: {
      const std::size_t s = alphabet_index(alphabet, event.value);
      if (s >= tables.groups.size() || event.k < 0 ||
          static_cast<std::size_t>(event.k) >= tables.groups[s].size()) {
        return 0;
      }
      return count_numeric_part(
          tables.groups[s][static_cast<std::size_t>(event.k)], event,
          /*equality=*/false);
    }
  }
  return 0;
}

struct ScoredEvent {
  double score = std::numeric_limits<double>::infinity();
  std::size_t event_index = std::numeric_limits<std::size_t>::max();
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  bool valid = false;

  bool better_than(const ScoredEvent& other) const {
    if (!valid) return false;
    if (!other.valid) return true;
    if (score != other.score) return score < other.score;
    return event_index < other.event_index;
  }
};

}  // namespace

SelectionResult select_event(const Mechanism& mechanism, double test_epsilon,
                             std::span<const InputCandidate> input_list,
                             const SeedContext& seeds,
                             const SelectionOptions& options) {
  if (input_list.empty()) {
    throw InvalidParameterError("select_event: input list must be non-empty");
  }
  if (options.n_select < 2) {
    throw InvalidParameterError("select_event: n_select must be at least 2");
  }

  const double frequency_floor = 0.001 *
                                 static_cast<double>(options.n_select) *
                                 std::exp(test_epsilon);

  SelectionResult best;
  bool have_best = false;
  double best_score = std::numeric_limits<double>::infinity();

  for (std::size_t tuple = 0; tuple < input_list.size(); ++tuple) {
    const InputCandidate& candidate = input_list[tuple];
    const auto stream_for = [&](std::uint64_t side) {
      return [&, side](std::size_t i) {
        return seeds.stream(StreamPhase::kSelectionRun, tuple, side, i);
      };
    };
    const std::vector<MechanismOutput> side1 =
        collect_runs(mechanism, candidate.pair.d1, candidate.args,
                     options.n_select, options.workers, stream_for(0));
    const std::vector<MechanismOutput> side2 =
        collect_runs(mechanism, candidate.pair.d2, candidate.args,
                     options.n_select, options.workers, stream_for(1));

    // Reference output: one noise-free execution on D1.
    MechanismArgs noiseless_args = candidate.args;
    noiseless_args.noiseless = true;
    RngStream unused = RngStream::from_keys({0});
    const MechanismOutput reference =
        mechanism.execute(candidate.pair.d1, noiseless_args, unused);

    const OutputProfile profile =
        profile_outputs(side1, side2, candidate.pair.length());
    const std::vector<Event> space =
        build_search_space(profile, options.grid_step);
    const SideTables tables1 = build_tables(side1, profile, reference);
    const SideTables tables2 = build_tables(side2, profile, reference);

    // Score all events; chunks keep local minima that are folded in chunk
    // order, so the winner is independent of the worker count.
    const std::size_t chunks =
        chunk_count_for(space.size(), options.workers);
    std::vector<ScoredEvent> chunk_best(chunks);
    parallel_chunks(
        space.size(), options.workers,
        [&](std::size_t chunk, std::size_t begin, std::size_t end) {
          ScoredEvent local;
          for (std::size_t e = begin; e < end; ++e) {
            const Event& event = space[e];
            const std::int64_t c1 = count_in(tables1, profile.alphabet, event);
            const std::int64_t c2 = count_in(tables2, profile.alphabet, event);
            if (static_cast<double>(c1 + c2) < frequency_floor) continue;
            RngStream top_rng =
                seeds.stream(StreamPhase::kSelectionScore, tuple, e, 0);
            RngStream bot_rng =
                seeds.stream(StreamPhase::kSelectionScore, tuple, e, 1);
            const double p_top = stats::pvalue(c1, c2, options.n_select,
                                               test_epsilon, top_rng,
                                               options.resamples);
            const double p_bot = stats::pvalue(c2, c1, options.n_select,
                                               test_epsilon, bot_rng,
                                               options.resamples);
            ScoredEvent scored{std::min(p_top, p_bot), e, c1, c2, true};
            if (scored.better_than(local)) local = scored;
          }
          chunk_best[chunk] = local;
        });

    ScoredEvent tuple_best;
    for (const ScoredEvent& scored : chunk_best) {
      if (scored.better_than(tuple_best)) tuple_best = scored;
    }
    if (!tuple_best.valid) continue;

    // Strictly-less keeps the earliest tuple on ties.
    if (!have_best || tuple_best.score < best_score) {
      have_best = true;
      best_score = tuple_best.score;
      best.pair = candidate.pair;
      best.args = candidate.args;
      best.event = BoundEvent{space[tuple_best.event_index], reference};
      best.exploratory_pvalue = tuple_best.score;
      best.c1 = tuple_best.c1;
      best.c2 = tuple_best.c2;
      best.input_index = tuple;
    }
  }

  if (!have_best) {
    throw NoCandidateEventError(
        "select_event: every candidate event fell below the frequency "
        "filter (combined count < 0.001 * n_select * e^epsilon); rerun with "
        "a larger n_select");
  }
  return best;
}

}  // namespace dpcheck
