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
//
// Command line front end.
//
//   dpcheck detect --mechanism svt --epsilon0 0.7 --sweep 0.1:2.2:0.1
//   dpcheck detect --mechanism histogram --epsilon0 0.2 --test-eps 0.2
//   dpcheck list
//
// Exit codes: 0 on success, 2 on configuration errors, 3 when at least one
// grid point failed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dpcheck/detector.hpp"
#include "dpcheck/error.hpp"
#include "dpcheck/mechanisms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPointFailed = 3;

std::vector<double> parse_sweep_spec(const std::string& spec) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3) {
    throw dpcheck::ConfigError("--sweep expects lo:hi:step, got '" + spec +
                               "'");
  }
  if (!(step > 0.0) || hi < lo) {
    throw dpcheck::ConfigError("--sweep requires step > 0 and hi >= lo");
  }
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double eps = lo + step * k;
    if (eps > hi + step * 1e-9) break;
    grid.push_back(eps);
  }
  return grid;
}

int run_detect(const dpcheck::DetectionConfig& config_in,
               const std::optional<double>& test_eps,
               const std::optional<std::string>& sweep_spec,
               const std::string& out_path, const std::string& format) {
  dpcheck::DetectionConfig config = config_in;
  if (test_eps && sweep_spec) {
    throw dpcheck::ConfigError("--test-eps and --sweep are mutually "
                               "exclusive");
  }
  if (test_eps) {
    config.test_epsilons = {*test_eps};
  } else if (sweep_spec) {
    config.test_epsilons = parse_sweep_spec(*sweep_spec);
  } else {
    config.test_epsilons =
        dpcheck::DetectionConfig::default_grid(config.epsilon0);
  }
  config.validate();

  const std::unique_ptr<dpcheck::Mechanism> mechanism =
      dpcheck::make_mechanism(config.mechanism);
  if (!mechanism) {
    throw dpcheck::ConfigError("unknown mechanism '" + config.mechanism +
                               "'; run 'dpcheck list' for the registry");
  }

  std::cerr << "dpcheck: testing " << config.mechanism
            << " (claimed epsilon0=" << config.epsilon0 << ") at "
            << config.test_epsilons.size() << " grid point(s), seed "
            << config.seed << "\n";

  const std::vector<dpcheck::DetectionResult> results = dpcheck::sweep(
      *mechanism, config, [](const dpcheck::DetectionResult& r) {
        if (r.ok()) {
          std::fprintf(stderr,
                       "  eps=%-6g min_p=%-12g event=%s  (%.1fs)\n",
                       r.test_epsilon, r.min_p(),
                       dpcheck::format_event(r.event.event).c_str(),
                       r.seconds);
        } else {
          std::fprintf(stderr, "  eps=%-6g FAILED: %s\n", r.test_epsilon,
                       r.error.c_str());
        }
      });

  const std::string report = format == "json"
                                 ? dpcheck::report_json(config, results)
                                 : dpcheck::report_csv(config, results);
  if (out_path.empty() || out_path == "-") {
    std::cout << report;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw dpcheck::ConfigError("cannot open output file '" + out_path +
                                 "'");
    }
    out << report;
    std::cerr << "dpcheck: wrote " << format << " report to " << out_path
              << "\n";
  }

  if (const auto verdict = dpcheck::violation_at_claimed_budget(config,
                                                                results)) {
    std::cerr << (*verdict
                      ? "dpcheck: VIOLATION detected at the claimed budget "
                      : "dpcheck: no violation detected at the claimed "
                        "budget ")
              << "(alpha=" << config.alpha << ")\n";
  }

  for (const auto& r : results) {
    if (!r.ok()) return kExitPointFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistical counterexample detector for differential "
               "privacy claims"};
  app.require_subcommand(1);

  auto* list_cmd =
      app.add_subcommand("list", "List the registered mechanisms");

  auto* detect_cmd = app.add_subcommand(
      "detect", "Test a mechanism's privacy claim over a grid of epsilons");

  dpcheck::DetectionConfig config;
  std::optional<double> test_eps;
  std::optional<std::string> sweep_spec;
  std::string out_path;
  std::string format = "csv";

  detect_cmd->add_option("--mechanism", config.mechanism,
                         "Registered mechanism name")
      ->required();
  detect_cmd->add_option("--epsilon0", config.epsilon0,
                         "Claimed privacy budget")
      ->required();
  detect_cmd->add_option("--test-eps", test_eps,
                         "Single test epsilon (default: sweep a grid)");
  detect_cmd->add_option("--sweep", sweep_spec,
                         "Test epsilon grid as lo:hi:step");
  detect_cmd->add_option("--n-detect", config.n_detect,
                         "Iterations per side for the final test")
      ->capture_default_str();
  detect_cmd->add_option("--n-select", config.n_select,
                         "Iterations per side for event selection")
      ->capture_default_str();
  detect_cmd->add_option("--resamples", config.resamples,
                         "Thinning draws averaged per p-value")
      ->capture_default_str();
  detect_cmd->add_option("--alpha", config.alpha,
                         "Significance threshold for the verdict")
      ->capture_default_str();
  detect_cmd->add_option("--seed", config.seed, "Master random seed")
      ->capture_default_str();
  detect_cmd->add_option("--workers", config.workers,
                         "Worker threads (0 = all hardware threads)")
      ->capture_default_str();
  detect_cmd->add_option("--grid-step", config.grid_step,
                         "Interval endpoint grid resolution")
      ->capture_default_str();
  detect_cmd->add_option("--sensitivity", config.sensitivity,
                         "Query sensitivity used for candidate inputs")
      ->capture_default_str();
  detect_cmd->add_option("--out", out_path,
                         "Output path (default: stdout)");
  detect_cmd->add_option("--format", format, "Report format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      return app.exit(e);
    }
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto name : dpcheck::mechanism_names()) {
        std::cout << name << "\n";
      }
      return kExitOk;
    }
    return run_detect(config, test_eps, sweep_spec, out_path, format);
  } catch (const dpcheck::ConfigError& e) {
    std::cerr << "dpcheck: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "dpcheck: error: " << e.what() << "\n";
    return kExitConfig;
  }
}
