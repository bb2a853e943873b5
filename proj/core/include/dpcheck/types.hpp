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

#ifndef DPCHECK_TYPES_HPP_
#define DPCHECK_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpcheck/rng.hpp"
#include "dpcheck/symbol.hpp"

namespace dpcheck {

// A vector of real query answers. Mechanisms under test consume query
// answers rather than raw records, so this is the whole "database" as far as
// the detector is concerned.
using QueryAnswerVector = std::vector<double>;

// The adjacency patterns used to build candidate input pairs. The first two
// model histogram adjacency (one answer moves by at most the sensitivity);
// the rest model per-query adjacency (every answer may move).
enum class Category {
  kOneAbove,
  kOneBelow,
  kOneAboveRestBelow,
  kOneBelowRestAbove,
  kHalfHalf,
  kAllAboveAllBelow,
  kXShape,
};

inline constexpr Category kAllCategories[] = {
    Category::kOneAbove,          Category::kOneBelow,
    Category::kOneAboveRestBelow, Category::kOneBelowRestAbove,
    Category::kHalfHalf,          Category::kAllAboveAllBelow,
    Category::kXShape,
};

// Which notion of adjacency a mechanism assumes of its inputs.
enum class Adjacency { kHistogram, kPerQuery };

std::string_view category_name(Category category);
Adjacency category_adjacency(Category category);

// Two adjacent query-answer vectors plus the pattern they instantiate.
struct AdjacentInputPair {
  QueryAnswerVector d1;
  QueryAnswerVector d2;
  Category category = Category::kOneAbove;
  double sensitivity = 1.0;

  // Builds a pair and checks the adjacency contract: equal lengths, finite
  // entries, and per-category deviation limits (exactly one coordinate may
  // differ for histogram categories, all may differ otherwise, never by more
  // than the sensitivity). Throws InvalidParameterError on violation.
  static AdjacentInputPair validated(QueryAnswerVector d1,
                                     QueryAnswerVector d2, Category category,
                                     double sensitivity);

  std::size_t length() const { return d1.size(); }
};

// Arguments handed to a mechanism alongside the query answers.
// `noiseless` forces every noise variable to zero, turning the mechanism
// into a deterministic function; the detector uses it to compute reference
// outputs and to probe branch behavior.
struct MechanismArgs {
  double epsilon0 = 1.0;
  std::optional<double> threshold;
  std::optional<int> bound;
  double sensitivity = 1.0;
  bool noiseless = false;
};

// One output entry: either a categorical symbol or a real number.
struct Atom {
  enum class Kind : std::uint32_t { kCategorical, kNumeric };

  Kind kind = Kind::kCategorical;
  Sym sym = kSymFalse;  // valid when categorical
  double num = 0.0;     // valid when numeric

  static Atom categorical(Sym s) { return Atom{Kind::kCategorical, s, 0.0}; }
  static Atom numeric(double v) { return Atom{Kind::kNumeric, kSymFalse, v}; }

  bool is_numeric() const { return kind == Kind::kNumeric; }

  friend bool operator==(const Atom& a, const Atom& b) {
    if (a.kind != b.kind) return false;
    return a.kind == Kind::kCategorical ? a.sym == b.sym : a.num == b.num;
  }
};

// One execution result: an ordered list of atoms. Threshold mechanisms
// produce a prefix of the query list, so the length can vary run to run.
struct MechanismOutput {
  std::vector<Atom> entries;

  std::size_t size() const { return entries.size(); }

  friend bool operator==(const MechanismOutput& a, const MechanismOutput& b) {
    return a.entries == b.entries;
  }
};

// Shape descriptor for a mechanism's outputs.
struct OutputKind {
  enum class Arity { kFixed, kVariable };
  enum class Atoms { kCategorical, kNumeric, kMixed };

  Arity arity = Arity::kFixed;
  std::size_t length = 0;  // meaningful when arity == kFixed
  Atoms atoms = Atoms::kCategorical;

  friend bool operator==(const OutputKind&, const OutputKind&) = default;
};

std::string output_kind_name(const OutputKind& kind);

// A randomized mechanism under test.
//
// Executions must be pure functions of (answers, args, stream): re-running
// with an identically derived stream reproduces the output bit for bit, and
// concurrent executions with distinct streams are safe. With
// args.noiseless set, execute() must not consume randomness at all.
class Mechanism {
 public:
  virtual ~Mechanism() = default;

  virtual std::string_view name() const = 0;

  // Adjacency notion the privacy claim is stated against.
  virtual Adjacency adjacency() const = 0;

  // Names of optional arguments the mechanism consumes ("threshold",
  // "bound"). The input generator grounds these; anything it does not
  // recognize is reported as unsupported.
  virtual std::vector<std::string_view> required_args() const { return {}; }

  // Declared output shape for inputs of the given length. Observed outputs
  // are checked against this in tests.
  virtual OutputKind output_kind(std::size_t input_length) const = 0;

  virtual MechanismOutput execute(const QueryAnswerVector& answers,
                                  const MechanismArgs& args,
                                  RngStream& rng) const = 0;
};

}  // namespace dpcheck

#endif  // DPCHECK_TYPES_HPP_
