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

#include "dpcheck/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "dpcheck/error.hpp"
#include "dpcheck/noise.hpp"

namespace dpcheck {
namespace {

void check_common_args(const QueryAnswerVector& answers,
                       const MechanismArgs& args, const char* who) {
  if (answers.empty()) {
    throw InvalidParameterError(std::string(who) +
                                ": query answers must be non-empty");
  }
  if (!(args.epsilon0 > 0.0) || !std::isfinite(args.epsilon0)) {
    throw InvalidParameterError(std::string(who) +
                                ": epsilon0 must be positive");
  }
}

// Noise draws honoring the noiseless flag. When noiseless, no randomness is
// consumed at all, so executions are deterministic.
double lap(double scale, const MechanismArgs& args, RngStream& rng) {
  return args.noiseless ? 0.0 : laplace_sample(scale, rng);
}

double expo(double scale, const MechanismArgs& args, RngStream& rng) {
  return args.noiseless ? 0.0 : exponential_sample(scale, rng);
}

// First maximal position, 1-based.
std::size_t argmax_index(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best + 1;
}

// ---------------------------------------------------------------------------
// Report noisy max and its value-returning variants.

enum class Noise { kLaplace, kExponential };
enum class MaxResult { kIndex, kValue };

template <Noise noise, MaxResult result_kind>
class NoisyMax final : public Mechanism {
 public:
  explicit NoisyMax(std::string_view name) : name_(name) {}

  std::string_view name() const override { return name_; }
  Adjacency adjacency() const override { return Adjacency::kPerQuery; }

  OutputKind output_kind(std::size_t) const override {
    return OutputKind{OutputKind::Arity::kFixed, 1,
                      result_kind == MaxResult::kIndex
                          ? OutputKind::Atoms::kCategorical
                          : OutputKind::Atoms::kNumeric};
  }

  MechanismOutput execute(const QueryAnswerVector& answers,
                          const MechanismArgs& args,
                          RngStream& rng) const override {
    check_common_args(answers, args, name_.data());
    const double scale = 2.0 / args.epsilon0;
    std::vector<double> noisy(answers.size());
    for (std::size_t i = 0; i < answers.size(); ++i) {
      const double eta = noise == Noise::kLaplace ? lap(scale, args, rng)
                                                  : expo(scale, args, rng);
      noisy[i] = answers[i] + eta;
    }
    MechanismOutput out;
    if constexpr (result_kind == MaxResult::kIndex) {
      out.entries.push_back(
          Atom::categorical(index_symbol(argmax_index(noisy))));
    } else {
      out.entries.push_back(
          Atom::numeric(*std::max_element(noisy.begin(), noisy.end())));
    }
    return out;
  }

 private:
  std::string_view name_;
};

// ---------------------------------------------------------------------------
// Histogram publication.

class Histogram final : public Mechanism {
 public:
  // wrong_scale uses Laplace(eps0) instead of Laplace(1/eps0).
  Histogram(std::string_view name, bool wrong_scale)
      : name_(name), wrong_scale_(wrong_scale) {}

  std::string_view name() const override { return name_; }
  Adjacency adjacency() const override { return Adjacency::kHistogram; }

  OutputKind output_kind(std::size_t input_length) const override {
    return OutputKind{OutputKind::Arity::kFixed, input_length,
                      OutputKind::Atoms::kNumeric};
  }

  MechanismOutput execute(const QueryAnswerVector& answers,
                          const MechanismArgs& args,
                          RngStream& rng) const override {
    check_common_args(answers, args, name_.data());
    const double scale = wrong_scale_ ? args.epsilon0 : 1.0 / args.epsilon0;
    MechanismOutput out;
    out.entries.reserve(answers.size());
    for (double answer : answers) {
      out.entries.push_back(Atom::numeric(answer + lap(scale, args, rng)));
    }
    return out;
  }

 private:
  std::string_view name_;
  bool wrong_scale_;
};

// ---------------------------------------------------------------------------
// The sparse vector family. All variants share the same shape: a noisy
// threshold drawn once, then one above/below answer per query, appended in
// query order. They differ in the noise scales, whether query noise exists
// at all, whether the loop halts after `bound` above-threshold answers, and
// whether an above-threshold step leaks the noisy value.

struct SvtProfile {
  std::string_view name;
  double threshold_scale_num = 2.0;  // eta1 ~ Lap(num * delta / eps0)
  bool query_noise = true;
  // eta2 ~ Lap(num * (scales_with_bound ? bound : 1) * delta / (den * eps0))
  double query_scale_num = 4.0;
  double query_scale_den = 1.0;
  bool query_scales_with_bound = true;
  bool halts = true;         // stop after `bound` above-threshold answers
  bool leaks_value = false;  // above-threshold emits the noisy answer
};

class SparseVector final : public Mechanism {
 public:
  explicit SparseVector(const SvtProfile& profile) : profile_(profile) {}

  std::string_view name() const override { return profile_.name; }
  Adjacency adjacency() const override { return Adjacency::kPerQuery; }

  std::vector<std::string_view> required_args() const override {
    std::vector<std::string_view> required = {"threshold"};
    if (profile_.halts) required.push_back("bound");
    return required;
  }

  OutputKind output_kind(std::size_t) const override {
    return OutputKind{OutputKind::Arity::kVariable, 0,
                      profile_.leaks_value ? OutputKind::Atoms::kMixed
                                           : OutputKind::Atoms::kCategorical};
  }

  MechanismOutput execute(const QueryAnswerVector& answers,
                          const MechanismArgs& args,
                          RngStream& rng) const override {
    check_common_args(answers, args, profile_.name.data());
    if (!args.threshold.has_value()) {
      throw InvalidParameterError(std::string(profile_.name) +
                                  ": threshold argument required");
    }
    if (!(args.sensitivity > 0.0)) {
      throw InvalidParameterError(std::string(profile_.name) +
                                  ": sensitivity must be positive");
    }
    int bound = 1;
    if (profile_.halts) {
      if (!args.bound.has_value() || *args.bound < 1) {
        throw InvalidParameterError(std::string(profile_.name) +
                                    ": bound argument must be at least 1");
      }
      bound = *args.bound;
    }

    const double delta = args.sensitivity;
    const double eps0 = args.epsilon0;
    const double noisy_threshold =
        *args.threshold +
        lap(profile_.threshold_scale_num * delta / eps0, args, rng);
    const double query_scale =
        profile_.query_scale_num *
        (profile_.query_scales_with_bound ? static_cast<double>(bound) : 1.0) *
        delta / (profile_.query_scale_den * eps0);

    MechanismOutput out;
    out.entries.reserve(answers.size());
    int above_count = 0;
    for (double answer : answers) {
      const double eta2 =
          profile_.query_noise ? lap(query_scale, args, rng) : 0.0;
      const double noisy_answer = answer + eta2;
      if (noisy_answer >= noisy_threshold) {
        out.entries.push_back(profile_.leaks_value
                                  ? Atom::numeric(noisy_answer)
                                  : Atom::categorical(kSymTrue));
        if (profile_.halts && ++above_count >= bound) break;
      } else {
        out.entries.push_back(Atom::categorical(kSymFalse));
      }
    }
    return out;
  }

 private:
  SvtProfile profile_;
};

constexpr SvtProfile kSvt{"svt", 2.0, true, 4.0, 1.0, true, true, false};
constexpr SvtProfile kISvt1{"isvt1", 2.0, false, 0.0, 1.0, false, false,
                            false};
constexpr SvtProfile kISvt2{"isvt2", 2.0, true, 2.0, 1.0, false, false, false};
constexpr SvtProfile kISvt3{"isvt3", 4.0, true, 4.0, 3.0, false, true, false};
constexpr SvtProfile kISvt4{"isvt4", 2.0, true, 2.0, 1.0, true, true, true};

}  // namespace

const std::vector<MechanismRegistryEntry>& mechanism_registry() {
  static const std::vector<MechanismRegistryEntry> registry = {
      {"noisy_max_lap",
       [] {
         return std::make_unique<NoisyMax<Noise::kLaplace, MaxResult::kIndex>>(
             "noisy_max_lap");
       }},
      {"noisy_max_exp",
       [] {
         return std::make_unique<
             NoisyMax<Noise::kExponential, MaxResult::kIndex>>(
             "noisy_max_exp");
       }},
      {"noisy_max_lap_value",
       [] {
         return std::make_unique<NoisyMax<Noise::kLaplace, MaxResult::kValue>>(
             "noisy_max_lap_value");
       }},
      {"noisy_max_exp_value",
       [] {
         return std::make_unique<
             NoisyMax<Noise::kExponential, MaxResult::kValue>>(
             "noisy_max_exp_value");
       }},
      {"histogram",
       [] { return std::make_unique<Histogram>("histogram", false); }},
      {"histogram_wrong_scale",
       [] {
         return std::make_unique<Histogram>("histogram_wrong_scale", true);
       }},
      {"svt", [] { return std::make_unique<SparseVector>(kSvt); }},
      {"isvt1", [] { return std::make_unique<SparseVector>(kISvt1); }},
      {"isvt2", [] { return std::make_unique<SparseVector>(kISvt2); }},
      {"isvt3", [] { return std::make_unique<SparseVector>(kISvt3); }},
      {"isvt4", [] { return std::make_unique<SparseVector>(kISvt4); }},
  };
  return registry;
}

std::vector<std::string_view> mechanism_names() {
  std::vector<std::string_view> names;
  names.reserve(mechanism_registry().size());
  for (const auto& entry : mechanism_registry()) names.push_back(entry.name);
  return names;
}

std::unique_ptr<Mechanism> make_mechanism(std::string_view name) {
  for (const auto& entry : mechanism_registry()) {
    if (entry.name == name) return entry.factory();
  }
  return nullptr;
}

}  // namespace dpcheck
