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

#ifndef DPCHECK_PARALLEL_HPP_
#define DPCHECK_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace dpcheck {

// Resolves a requested worker count; 0 means "use all hardware threads".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, n) into at most `workers` contiguous chunks and runs
// fn(chunk_index, begin, end) on each, in parallel.
//
// The chunking is a pure function of (n, workers), never of scheduling, so
// callers that store per-chunk partial results and fold them in chunk order
// get bit-reproducible reductions. The first exception thrown by any chunk
// is rethrown on the calling thread.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (n == 0) return;
  const std::size_t chunk_count = std::min<std::size_t>(workers, n);
  if (chunk_count <= 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run_chunk = [&](std::size_t chunk) {
    const std::size_t begin = n * chunk / chunk_count;
    const std::size_t end = n * (chunk + 1) / chunk_count;
    try {
      fn(chunk, begin, end);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(chunk_count - 1);
  for (std::size_t chunk = 1; chunk < chunk_count; ++chunk) {
    threads.emplace_back(run_chunk, chunk);
  }
  run_chunk(0);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Number of chunks parallel_chunks will use; handy for sizing per-chunk
// accumulator arrays.
inline std::size_t chunk_count_for(std::size_t n, unsigned workers) {
  if (n == 0) return 0;
  return std::min<std::size_t>(resolve_workers(workers), n);
}

}  // namespace dpcheck

#endif  // DPCHECK_PARALLEL_HPP_
