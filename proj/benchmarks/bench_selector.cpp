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

#include <benchmark/benchmark.h>

#include "dpcheck/event_selector.hpp"
#include "dpcheck/input_generator.hpp"
#include "dpcheck/mechanisms.hpp"

namespace {

// One full selection pass (sampling, table building, scoring) on a single
// candidate tuple, at a budget of n_select = range(0) per side.
void bench_selection(benchmark::State& state, const char* name) {
  const auto mechanism = dpcheck::make_mechanism(name);
  const auto candidates = dpcheck::input_list(*mechanism, 0.7);
  const std::span<const dpcheck::InputCandidate> first(candidates.data(), 1);
  dpcheck::SelectionOptions options;
  options.n_select = state.range(0);
  const dpcheck::SeedContext seeds{99, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dpcheck::select_event(*mechanism, 0.7, first, seeds, options));
  }
}

void BM_SelectNoisyMax(benchmark::State& state) {
  bench_selection(state, "noisy_max_lap");
}
void BM_SelectHistogram(benchmark::State& state) {
  bench_selection(state, "histogram");
}
void BM_SelectSvt(benchmark::State& state) { bench_selection(state, "svt"); }

BENCHMARK(BM_SelectNoisyMax)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelectHistogram)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelectSvt)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
