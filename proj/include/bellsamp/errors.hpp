// Copyright 2026 The bellsamp Authors
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

#ifndef BELLSAMP_ERRORS_HPP
#define BELLSAMP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bellsamp {

// Mismatched bit-vector lengths, matrix shapes, or qubit counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dense-simulation request exceeds its qubit cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line == 0 ? msg
                                     : msg + " (line " + std::to_string(line) +
                                           ")"),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input state fails a property every stabilizer state has; signals an
// upstream bug rather than a user error.
class NotStabilizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state access ran out of its copy budget.
class AccessExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bellsamp

#endif  // BELLSAMP_ERRORS_HPP
