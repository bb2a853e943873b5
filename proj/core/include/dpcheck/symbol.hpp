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

#ifndef DPCHECK_SYMBOL_HPP_
#define DPCHECK_SYMBOL_HPP_

#include <cstdint>
#include <string>

namespace dpcheck {

// Categorical output values. The vocabulary is tiny and closed: the boolean
// symbols emitted by threshold mechanisms, plus 1-based indices emitted by
// selection mechanisms. Encoding them as integers keeps atoms POD and lets
// hot loops compare symbols without touching strings.
using Sym = std::uint32_t;

inline constexpr Sym kSymFalse = 0;
inline constexpr Sym kSymTrue = 1;

// Symbol for a 1-based index (argmax winners and the like).
constexpr Sym index_symbol(std::size_t index) {
  return static_cast<Sym>(index) + 1;
}

// Human-readable name: "False", "True", or the decimal index.
std::string symbol_name(Sym sym);

}  // namespace dpcheck

#endif  // DPCHECK_SYMBOL_HPP_
