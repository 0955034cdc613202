/* Copyright 2026 The Universal Machine Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace um {

// Base of every failure the core reports. The C API maps the subclasses onto
// status codes; nothing else relies on the hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or XML. Line/column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0, std::string file = {})
      : Error(format(message, line, column, file)),
        detail_(message),
        line_(line),
        column_(column),
        file_(std::move(file)) {}

  const std::string& detail() const { return detail_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& file() const { return file_; }

 private:
  static std::string format(const std::string& message, int line, int column,
                            const std::string& file) {
    std::string out;
    if (!file.empty()) out += file + ":";
    if (line > 0) out += std::to_string(line) + ":" + std::to_string(column) + ": ";
    return out + message;
  }

  std::string detail_;
  int line_;
  int column_;
  std::string file_;
};

// A module, constant, or view reference that does not resolve.
class ResolveError : public Error {
 public:
  using Error::Error;
};

// Name collisions: duplicate modules, rules, assignments.
class ConflictError : public Error {
 public:
  using Error::Error;
};

// Structurally well-formed input that violates an invariant (include cycles,
// arity mismatches, bad notations, non-syntactic realizations).
class InvalidError : public Error {
 public:
  using Error::Error;
};

}  // namespace um
