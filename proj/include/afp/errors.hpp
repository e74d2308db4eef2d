// Copyright 2026 the afp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AFP_ERRORS_HPP_
#define AFP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace afp {

/// Base class for all recoverable afp errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Two morphisms or lattices were combined with incompatible shapes.
class shape_error : public error {
 public:
  explicit shape_error(const std::string& what) : error(what) {}
};

/// A construction or exhaustive scan would exceed a configured cap.
class cap_error : public error {
 public:
  explicit cap_error(const std::string& what) : error(what) {}
};

/// A candidate pair function failed the precision-order monotonicity check.
/// Carries the violating input pair, encoded in the domain of the candidate.
class not_p_monotone : public error {
 public:
  not_p_monotone(const std::string& what, long long smaller, long long larger)
      : error(what), smaller_pair(smaller), larger_pair(larger) {}

  long long smaller_pair;  // encoded pair index of the <=p-smaller input
  long long larger_pair;   // encoded pair index of the <=p-larger input
};

/// Syntax error in a logic program or input file, with source position.
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line, int column)
      : error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line(line),
        column(column) {}

  int line;
  int column;
};

}  // namespace afp

#endif  // AFP_ERRORS_HPP_
