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

#ifndef DPCHECK_RUNNER_HPP_
#define DPCHECK_RUNNER_HPP_

#include <cstdint>
#include <vector>

#include "dpcheck/parallel.hpp"
#include "dpcheck/types.hpp"

namespace dpcheck {

// Runs the mechanism `n` times and stores every output. `make_stream(i)`
// must derive the random stream for iteration i; because streams are keyed
// by the iteration index, the result is independent of the worker count.
template <typename MakeStream>
std::vector<MechanismOutput> collect_runs(const Mechanism& mechanism,
                                          const QueryAnswerVector& answers,
                                          const MechanismArgs& args,
                                          std::int64_t n, unsigned workers,
                                          MakeStream&& make_stream) {
  std::vector<MechanismOutput> outputs(static_cast<std::size_t>(n));
  parallel_chunks(static_cast<std::size_t>(n), workers,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      RngStream rng = make_stream(i);
                      outputs[i] = mechanism.execute(answers, args, rng);
                    }
                  });
  return outputs;
}

// Runs the mechanism `n` times and counts outputs accepted by `pred`,
// without storing them. Counts are summed per chunk and folded in chunk
// order, so the total is independent of scheduling.
template <typename MakeStream, typename Pred>
std::int64_t count_runs(const Mechanism& mechanism,
                        const QueryAnswerVector& answers,
                        const MechanismArgs& args, std::int64_t n,
                        unsigned workers, MakeStream&& make_stream,
                        Pred&& pred) {
  const std::size_t chunks =
      chunk_count_for(static_cast<std::size_t>(n), workers);
  std::vector<std::int64_t> partial(chunks, 0);
  parallel_chunks(static_cast<std::size_t>(n), workers,
                  [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                    std::int64_t local = 0;
                    for (std::size_t i = begin; i < end; ++i) {
                      RngStream rng = make_stream(i);
                      if (pred(mechanism.execute(answers, args, rng))) {
                        ++local;
                      }
                    }
                    partial[chunk] = local;
                  });
  std::int64_t total = 0;
  for (std::int64_t c : partial) total += c;
  return total;
}

}  // namespace dpcheck

#endif  // DPCHECK_RUNNER_HPP_
