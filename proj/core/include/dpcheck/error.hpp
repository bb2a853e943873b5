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

#ifndef DPCHECK_ERROR_HPP_
#define DPCHECK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dpcheck {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller supplied a value outside an operation's domain (non-positive
// scale, count exceeding the iteration budget, malformed adjacency, ...).
class InvalidParameterError : public Error {
 public:
  explicit InvalidParameterError(const std::string& what) : Error(what) {}
};

// The event selector filtered out every candidate event. Usually means the
// exploration budget was too small for the event frequency cutoff.
class NoCandidateEventError : public Error {
 public:
  explicit NoCandidateEventError(const std::string& what) : Error(what) {}
};

// A mechanism requires an argument the input generator does not know how to
// ground. Carries the offending parameter name.
class UnsupportedArgError : public Error {
 public:
  UnsupportedArgError(const std::string& arg_name, const std::string& what)
      : Error(what), arg_name_(arg_name) {}

  const std::string& arg_name() const { return arg_name_; }

 private:
  std::string arg_name_;
};

// Invalid detection configuration (bad grid, alpha out of range, unknown
// mechanism name, ...). The CLI maps this to its configuration exit code.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace dpcheck

#endif  // DPCHECK_ERROR_HPP_
