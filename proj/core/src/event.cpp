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

#include "dpcheck/event.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dpcheck {

Event Event::hamming_shell(std::int32_t k) {
  Event e;
  e.kind = Kind::kHammingShell;
  e.k = k;
  return e;
}

Event Event::length_is(std::int32_t k) {
  Event e;
  e.kind = Kind::kLengthIs;
  e.k = k;
  return e;
}

Event Event::count_of_value(Sym value, std::int32_t k) {
  Event e;
  e.kind = Kind::kCountOfValueIs;
  e.value = value;
  e.k = k;
  return e;
}

Event Event::coord_in(std::int32_t coord, double lo, double hi) {
  Event e;
  e.kind = Kind::kCoordInInterval;
  e.selector = NumericSelector{false, coord, Aggregate::kAvg};
  e.lo = lo;
  e.hi = hi;
  return e;
}

Event Event::coord_equals(std::int32_t coord, std::int32_t k) {
  Event e;
  e.kind = Kind::kCoordEquals;
  e.selector = NumericSelector{false, coord, Aggregate::kAvg};
  e.k = k;
  return e;
}

Event Event::agg_in(Aggregate aggregate, double lo, double hi) {
  Event e;
  e.kind = Kind::kAggInInterval;
  e.selector = NumericSelector{true, 0, aggregate};
  e.lo = lo;
  e.hi = hi;
  return e;
}

Event Event::product(Sym value, std::int32_t k, NumericSelector selector,
                     double lo, double hi) {
  Event e;
  e.kind = Kind::kProduct;
  e.value = value;
  e.k = k;
  e.selector = selector;
  e.lo = lo;
  e.hi = hi;
  return e;
}

std::int64_t hamming_distance(const MechanismOutput& a,
                              const MechanismOutput& b) {
  const std::size_t common = std::min(a.size(), b.size());
  std::int64_t distance = 0;
  for (std::size_t i = 0; i < common; ++i) {
    if (!(a.entries[i] == b.entries[i])) ++distance;
  }
  distance += static_cast<std::int64_t>(std::max(a.size(), b.size()) - common);
  return distance;
}

namespace {

std::int64_t count_of_value(const MechanismOutput& output, Sym value) {
  std::int64_t count = 0;
  for (const Atom& atom : output.entries) {
    if (atom.kind == Atom::Kind::kCategorical && atom.sym == value) ++count;
  }
  return count;
}

}  // namespace

std::optional<double> numeric_selector_value(const Event::NumericSelector& sel,
                                             const MechanismOutput& output) {
  if (!sel.is_aggregate) {
    const auto i = static_cast<std::size_t>(sel.coord);
    if (sel.coord < 0 || i >= output.size()) return std::nullopt;
    const Atom& atom = output.entries[i];
    if (!atom.is_numeric()) return std::nullopt;
    return atom.num;
  }
  double sum = 0.0;
  double mn = std::numeric_limits<double>::infinity();
  double mx = -std::numeric_limits<double>::infinity();
  std::int64_t n = 0;
  for (const Atom& atom : output.entries) {
    if (!atom.is_numeric()) continue;
    ++n;
    sum += atom.num;
    mn = std::min(mn, atom.num);
    mx = std::max(mx, atom.num);
  }
  if (n == 0) return std::nullopt;
  switch (sel.aggregate) {
    case Event::Aggregate::kAvg:
      return sum / static_cast<double>(n);
    case Event::Aggregate::kMin:
      return mn;
    case Event::Aggregate::kMax:
      return mx;
  }
  return std::nullopt;
}

bool event_contains(const Event& event, const MechanismOutput& output,
                    const MechanismOutput& reference) {
  switch (event.kind) {
    case Event::Kind::kHammingShell:
      return hamming_distance(output, reference) == event.k;
    case Event::Kind::kLengthIs:
      return static_cast<std::int64_t>(output.size()) == event.k;
    case Event::Kind::kCountOfValueIs:
      return count_of_value(output, event.value) == event.k;
    case Event::Kind::kCoordInInterval:
    case Event::Kind::kAggInInterval: {
      const auto v = numeric_selector_value(event.selector, output);
      return v.has_value() && event.lo < *v && *v < event.hi;
    }
    case Event::Kind::kCoordEquals: {
      const auto v = numeric_selector_value(event.selector, output);
      return v.has_value() && *v == static_cast<double>(event.k);
    }
    case Event::Kind::kProduct: {
      if (count_of_value(output, event.value) != event.k) return false;
      const auto v = numeric_selector_value(event.selector, output);
      return v.has_value() && event.lo < *v && *v < event.hi;
    }
  }
  return false;
}

namespace {

// Interval bounds print as "-inf"/"inf" or as decimals with at least one
// fractional digit ("1.0", "-2.4"), matching the counterexample reports.
std::string format_bound(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  std::string s(buf);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string format_interval(double lo, double hi) {
  return "(" + format_bound(lo) + "," + format_bound(hi) + ")";
}

std::string format_numeric_part(const Event::NumericSelector& sel, double lo,
                                double hi) {
  if (!sel.is_aggregate) {
    return "coord[" + std::to_string(sel.coord) + "]in" +
           format_interval(lo, hi);
  }
  switch (sel.aggregate) {
    case Event::Aggregate::kAvg:
      return "avg" + format_interval(lo, hi);
    case Event::Aggregate::kMin:
      return "min" + format_interval(lo, hi);
    case Event::Aggregate::kMax:
      return "max" + format_interval(lo, hi);
  }
  return "";
}

}  // namespace

std::string format_event(const Event& event) {
  switch (event.kind) {
    case Event::Kind::kHammingShell:
      return "hamming=" + std::to_string(event.k);
    case Event::Kind::kLengthIs:
      return "length=" + std::to_string(event.k);
    case Event::Kind::kCountOfValueIs:
      return "count(" + symbol_name(event.value) +
             ")=" + std::to_string(event.k);
    case Event::Kind::kCoordInInterval:
    case Event::Kind::kAggInInterval:
      return format_numeric_part(event.selector, event.lo, event.hi);
    case Event::Kind::kCoordEquals:
      return "coord[" + std::to_string(event.selector.coord) +
             "]=" + std::to_string(event.k);
    case Event::Kind::kProduct:
      return "count(" + symbol_name(event.value) +
             ")=" + std::to_string(event.k) + "&" +
             format_numeric_part(event.selector, event.lo, event.hi);
  }
  return "";
}

}  // namespace dpcheck
