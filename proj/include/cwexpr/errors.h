// Copyright 2026 The cwexpr Authors
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

#ifndef CWEXPR_ERRORS_H_
#define CWEXPR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cwexpr {

// Malformed text input (graph files, expressions, recipes). Carries a
// 1-based position when one is known; zero means "unknown".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(Format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string& message, int line,
                            int column) {
    if (line <= 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }

  int line_;
  int column_;
};

// A documented precondition of an operation does not hold (duplicate ids,
// missing vertices, invalid bipartition, non-module, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search was asked to run beyond its size cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cwexpr

#endif  // CWEXPR_ERRORS_H_
