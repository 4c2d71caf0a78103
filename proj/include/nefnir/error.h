// Copyright 2026 The Nefnir Authors.
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

#ifndef NEFNIR_ERROR_H_
#define NEFNIR_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace nefnir {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed line in one of the TSV input formats. Carries the 1-based line
// number (0 when parsing a detached line) and the raw line content.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::string line,
             size_t line_number = 0)
      : Error(line_number == 0 ? message + ": '" + line + "'"
                               : "line " + std::to_string(line_number) + ": " +
                                     message + ": '" + line + "'"),
        line_(std::move(line)),
        line_number_(line_number) {}

  const std::string &line() const { return line_; }
  size_t line_number() const { return line_number_; }

 private:
  std::string line_;
  size_t line_number_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ModelFormatError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

// A metric was requested over an empty population.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace nefnir

#endif  // NEFNIR_ERROR_H_
