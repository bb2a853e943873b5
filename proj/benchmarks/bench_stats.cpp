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

#include "dpcheck/rng.hpp"
#include "dpcheck/stats.hpp"

namespace {

// Tail evaluation near the mode is the worst case: the early-exit window is
// widest there.
void BM_HypergeomCdfNearMode(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::int64_t k = n / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpcheck::stats::hypergeom_cdf(k, 2 * n, n, n));
    k = (k == n / 2) ? n / 2 + 1 : n / 2;  // defeat value caching
  }
}
BENCHMARK(BM_HypergeomCdfNearMode)->Arg(1000)->Arg(100000)->Arg(500000);

void BM_HypergeomCdfFarTail(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dpcheck::stats::hypergeom_cdf(n / 4, 2 * n, n, n / 2));
  }
}
BENCHMARK(BM_HypergeomCdfFarTail)->Arg(100000)->Arg(500000);

void BM_PValue(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  dpcheck::RngStream rng = dpcheck::RngStream::from_keys({42});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dpcheck::stats::pvalue(n / 5, n / 7, n, 0.5, rng));
  }
}
BENCHMARK(BM_PValue)->Arg(1000)->Arg(100000)->Arg(500000);

}  // namespace
