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

#ifndef DPCHECK_RNG_HPP_
#define DPCHECK_RNG_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace dpcheck {

// A small, fast counter-derivable random stream (xoshiro256++) used for every
// randomized computation in the library.
//
// There is deliberately no global generator. Each task derives its own
// independent stream from a tuple of labels (master seed, grid point, phase,
// task indices). Derivation is pure, so results never depend on thread
// scheduling or on how work is split across workers.
class RngStream {
 public:
  using result_type = std::uint64_t;

  // Derives a stream from an arbitrary label tuple. Distinct tuples yield
  // (statistically) independent streams.
  static RngStream from_keys(std::initializer_list<std::uint64_t> keys);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform draw in [0, 1) with 53 bits of precision.
  double uniform01();

 private:
  std::array<std::uint64_t, 4> state_{};
};

// Stream labels used by the detection pipeline. Selection and detection use
// disjoint phases, which is what guarantees the final hypothesis test never
// reuses exploration samples.
enum class StreamPhase : std::uint64_t {
  kSelectionRun = 1,   // mechanism executions inside the event selector
  kSelectionScore = 2, // binomial thinning draws while scoring events
  kDetectionRun = 3,   // fresh mechanism executions for the final test
  kDetectionPValue = 4 // binomial thinning draws for the final p-values
};

// Seed bookkeeping for one detection point. `master` comes from the user,
// `point` is the grid point index; both are echoed in reports so any run can
// be replayed exactly.
struct SeedContext {
  std::uint64_t master = 1;
  std::uint64_t point = 0;

  RngStream stream(StreamPhase phase, std::uint64_t a, std::uint64_t b,
                   std::uint64_t c = 0) const {
    return RngStream::from_keys(
        {master, point, static_cast<std::uint64_t>(phase), a, b, c});
  }
};

}  // namespace dpcheck

#endif  // DPCHECK_RNG_HPP_
