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

#include "dpcheck/rng.hpp"

namespace dpcheck {
namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

// SplitMix64; used only to expand key material into xoshiro state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream RngStream::from_keys(std::initializer_list<std::uint64_t> keys) {
  // Absorb the label tuple into a single well-mixed word, then expand.
  std::uint64_t acc = 0x8C6E1533D4FA7A21ULL;
  for (std::uint64_t k : keys) {
    acc = splitmix64(acc) ^ k;
  }
  RngStream s;
  for (auto& word : s.state_) {
    word = splitmix64(acc);
  }
  if ((s.state_[0] | s.state_[1] | s.state_[2] | s.state_[3]) == 0) {
    s.state_[0] = 0x9E3779B97F4A7C15ULL;
  }
  return s;
}

RngStream::result_type RngStream::operator()() {
  // xoshiro256++ by Blackman & Vigna.
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::uniform01() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

}  // namespace dpcheck
