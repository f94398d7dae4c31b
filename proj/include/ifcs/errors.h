// Copyright 2026 The IFCS Authors
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

#ifndef IFCS_ERRORS_H_
#define IFCS_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ifcs {

// Base for everything caused by bad user input (files, flags, motif shape).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed row in a TSV source. `line` is 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A row refers to a vertex id that was never declared.
class ReferenceError : public InputError {
 public:
  using InputError::InputError;
};

// Structurally invalid input: self-loops, disconnected motifs, and so on.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// An anchored enumeration explored more embeddings than the query allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ifcs

#endif  // IFCS_ERRORS_H_
