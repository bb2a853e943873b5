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

#include "dpcheck/detector.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <utility>

#include <nlohmann/json.hpp>

#include "dpcheck/error.hpp"
#include "dpcheck/input_generator.hpp"
#include "dpcheck/stats.hpp"

namespace dpcheck {
namespace {

// Shortest round-trip decimal form; deterministic across runs.
std::string fmt_double(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

std::string fmt_vector(const QueryAnswerVector& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ";";
    out += fmt_double(values[i]);
  }
  out += "]";
  return out;
}

std::string fmt_args(const MechanismArgs& args) {
  std::string out = "epsilon0=" + fmt_double(args.epsilon0);
  out += ";sensitivity=" + fmt_double(args.sensitivity);
  if (args.threshold.has_value()) {
    out += ";threshold=" + fmt_double(*args.threshold);
  }
  if (args.bound.has_value()) {
    out += ";bound=" + std::to_string(*args.bound);
  }
  return out;
}

std::string fmt_seconds(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", seconds);
  return buf;
}

nlohmann::ordered_json json_output(const MechanismOutput& output) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const Atom& atom : output.entries) {
    if (atom.is_numeric()) {
      entries.push_back(atom.num);
    } else {
      entries.push_back(symbol_name(atom.sym));
    }
  }
  return entries;
}

}  // namespace

void DetectionConfig::validate() const {
  if (mechanism.empty()) {
    throw ConfigError("config: mechanism name must be set");
  }
  if (!(epsilon0 > 0.0) || !std::isfinite(epsilon0)) {
    throw ConfigError("config: epsilon0 must be positive");
  }
  if (test_epsilons.empty()) {
    throw ConfigError("config: test epsilon grid must be non-empty");
  }
  for (std::size_t i = 0; i < test_epsilons.size(); ++i) {
    if (!(test_epsilons[i] >= 0.0) || !std::isfinite(test_epsilons[i])) {
      throw ConfigError("config: test epsilons must be finite and >= 0");
    }
    if (i > 0 && !(test_epsilons[i] > test_epsilons[i - 1])) {
      throw ConfigError("config: test epsilon grid must be strictly "
                        "increasing");
    }
  }
  if (n_detect < 1) throw ConfigError("config: n_detect must be at least 1");
  if (n_select < 2) throw ConfigError("config: n_select must be at least 2");
  if (resamples < 1) throw ConfigError("config: resamples must be at least 1");
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw ConfigError("config: alpha must lie strictly between 0 and 1");
  }
  if (!(grid_step > 0.0) || !std::isfinite(grid_step)) {
    throw ConfigError("config: grid_step must be positive");
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw ConfigError("config: sensitivity must be positive");
  }
}

std::vector<double> DetectionConfig::default_grid(double epsilon0) {
  std::vector<double> grid;
  const double hi = epsilon0 + 1.5;
  for (int k = 0;; ++k) {
    const double eps = 0.05 + 0.1 * k;
    if (eps > hi + 1e-9) break;
    grid.push_back(eps);
  }
  return grid;
}

DetectionResult detect(const Mechanism& mechanism,
                       const DetectionConfig& config, double test_epsilon,
                       std::uint64_t point_index) {
  const auto start = std::chrono::steady_clock::now();

  const std::vector<InputCandidate> candidates =
      input_list(mechanism, config.epsilon0, config.sensitivity);

  const SeedContext seeds{config.seed, point_index};
  SelectionOptions options;
  options.n_select = config.n_select;
  options.workers = config.workers;
  options.resamples = config.resamples;
  options.grid_step = config.grid_step;

  SelectionResult selection =
      select_event(mechanism, test_epsilon, candidates, seeds, options);

  const stats::HypothesisTestResult tested = stats::hypothesis_test(
      mechanism, selection.args, test_epsilon, selection.pair,
      selection.event, config.n_detect, seeds, config.workers,
      config.resamples);

  DetectionResult result;
  result.test_epsilon = test_epsilon;
  result.pair = std::move(selection.pair);
  result.args = selection.args;
  result.event = std::move(selection.event);
  result.exploratory_pvalue = selection.exploratory_pvalue;
  result.c1 = tested.counts.c1;
  result.c2 = tested.counts.c2;
  result.n = tested.counts.n;
  result.p_top = tested.pvalues.p_top;
  result.p_bot = tested.pvalues.p_bot;
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::vector<DetectionResult> sweep(const Mechanism& mechanism,
                                   const DetectionConfig& config,
                                   const SweepObserver& on_point) {
  config.validate();
  std::vector<DetectionResult> results;
  results.reserve(config.test_epsilons.size());
  for (std::size_t point = 0; point < config.test_epsilons.size(); ++point) {
    const double eps = config.test_epsilons[point];
    try {
      results.push_back(detect(mechanism, config, eps, point));
    } catch (const std::exception& e) {
      DetectionResult failed;
      failed.test_epsilon = eps;
      failed.error = e.what();
      results.push_back(std::move(failed));
    }
    if (on_point) on_point(results.back());
  }
  return results;
}

std::optional<bool> violation_at_claimed_budget(
    const DetectionConfig& config, std::span<const DetectionResult> results) {
  for (const DetectionResult& result : results) {
    if (result.ok() &&
        std::abs(result.test_epsilon - config.epsilon0) < 1e-12) {
      return result.min_p() < config.alpha;
    }
  }
  return std::nullopt;
}

std::string report_csv(const DetectionConfig& config,
                       std::span<const DetectionResult> results) {
  std::string out;
  // Replay metadata. The worker count is omitted on purpose: results are
  // independent of it.
  out += "# dpcheck detection report\n";
  out += "# mechanism=" + config.mechanism + "\n";
  out += "# epsilon0=" + fmt_double(config.epsilon0) + "\n";
  out += "# seed=" + std::to_string(config.seed) + "\n";
  out += "# n_detect=" + std::to_string(config.n_detect) + "\n";
  out += "# n_select=" + std::to_string(config.n_select) + "\n";
  out += "# resamples=" + std::to_string(config.resamples) + "\n";
  out += "# alpha=" + fmt_double(config.alpha) + "\n";
  out += "# grid_step=" + fmt_double(config.grid_step) + "\n";
  out += "# sensitivity=" + fmt_double(config.sensitivity) + "\n";
  out +=
      "mechanism,epsilon0,test_epsilon,category,d1,d2,args,event,c1,c2,n,"
      "p_top,p_bot,min_p,seconds\n";
  for (const DetectionResult& r : results) {
    if (!r.ok()) continue;
    out += config.mechanism;
    out += "," + fmt_double(config.epsilon0);
    out += "," + fmt_double(r.test_epsilon);
    out += "," + std::string(category_name(r.pair.category));
    out += "," + fmt_vector(r.pair.d1);
    out += "," + fmt_vector(r.pair.d2);
    out += "," + fmt_args(r.args);
    out += "," + format_event(r.event.event);
    out += "," + std::to_string(r.c1);
    out += "," + std::to_string(r.c2);
    out += "," + std::to_string(r.n);
    out += "," + fmt_double(r.p_top);
    out += "," + fmt_double(r.p_bot);
    out += "," + fmt_double(r.min_p());
    out += "," + fmt_seconds(r.seconds);
    out += "\n";
  }
  return out;
}

std::string report_json(const DetectionConfig& config,
                        std::span<const DetectionResult> results) {
  nlohmann::ordered_json doc;
  doc["tool"] = "dpcheck";
  nlohmann::ordered_json cfg;
  cfg["mechanism"] = config.mechanism;
  cfg["epsilon0"] = config.epsilon0;
  cfg["test_epsilons"] = config.test_epsilons;
  cfg["n_detect"] = config.n_detect;
  cfg["n_select"] = config.n_select;
  cfg["resamples"] = config.resamples;
  cfg["alpha"] = config.alpha;
  cfg["seed"] = config.seed;
  cfg["grid_step"] = config.grid_step;
  cfg["sensitivity"] = config.sensitivity;
  doc["config"] = std::move(cfg);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  for (const DetectionResult& r : results) {
    if (!r.ok()) {
      nlohmann::ordered_json err;
      err["test_epsilon"] = r.test_epsilon;
      err["message"] = r.error;
      errors.push_back(std::move(err));
      continue;
    }
    nlohmann::ordered_json row;
    row["mechanism"] = config.mechanism;
    row["epsilon0"] = config.epsilon0;
    row["test_epsilon"] = r.test_epsilon;
    row["category"] = std::string(category_name(r.pair.category));
    row["d1"] = r.pair.d1;
    row["d2"] = r.pair.d2;
    nlohmann::ordered_json args;
    args["epsilon0"] = r.args.epsilon0;
    args["sensitivity"] = r.args.sensitivity;
    if (r.args.threshold.has_value()) args["threshold"] = *r.args.threshold;
    if (r.args.bound.has_value()) args["bound"] = *r.args.bound;
    row["args"] = std::move(args);
    row["event"] = format_event(r.event.event);
    row["reference"] = json_output(r.event.reference);
    row["c1"] = r.c1;
    row["c2"] = r.c2;
    row["n"] = r.n;
    row["p_top"] = r.p_top;
    row["p_bot"] = r.p_bot;
    row["min_p"] = r.min_p();
    row["exploratory_pvalue"] = r.exploratory_pvalue;
    row["seconds"] = r.seconds;
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  doc["errors"] = std::move(errors);
  return doc.dump(2) + "\n";
}

}  // namespace dpcheck
