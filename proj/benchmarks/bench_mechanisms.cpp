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

#include "dpcheck/mechanisms.hpp"
#include "dpcheck/rng.hpp"

namespace {

void bench_mechanism(benchmark::State& state, const char* name) {
  const auto mechanism = dpcheck::make_mechanism(name);
  const dpcheck::QueryAnswerVector q(10, 1.0);
  dpcheck::MechanismArgs args;
  args.epsilon0 = 0.7;
  args.threshold = 0.5;
  args.bound = 1;
  std::uint64_t i = 0;
  for (auto _ : state) {
    dpcheck::RngStream rng = dpcheck::RngStream::from_keys({7, i++});
    benchmark::DoNotOptimize(mechanism->execute(q, args, rng));
  }
}

void BM_NoisyMaxLap(benchmark::State& state) {
  bench_mechanism(state, "noisy_max_lap");
}
void BM_Histogram(benchmark::State& state) {
  bench_mechanism(state, "histogram");
}
void BM_Svt(benchmark::State& state) { bench_mechanism(state, "svt"); }
void BM_ISvt4(benchmark::State& state) { bench_mechanism(state, "isvt4"); }

BENCHMARK(BM_NoisyMaxLap);
BENCHMARK(BM_Histogram);
BENCHMARK(BM_Svt);
BENCHMARK(BM_ISvt4);

}  // namespace
