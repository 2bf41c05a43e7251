// Copyright 2026 The Authors.
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

#ifndef SEQSUB_ERROR_HPP_
#define SEQSUB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace seqsub {

// Base class for every error thrown by this library. All of these map to
// the CLI's operational-error exit code; verification failures are reported
// through return values, never exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance file. Carries the 1-based line number of the offending
// line (0 when the problem is file-wide, e.g. a missing section).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A requested enumeration or scan exceeds its budget. Budgets are hard
// preconditions so that accidental exponential blowups fail fast instead of
// hanging; callers can raise them explicitly.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A check was requested whose hypotheses do not hold, e.g. ratio constants
// for a function that is not forward monotone.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain (bad k, tau, constants outside
// (0, 1], unknown element names, and similar).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A function could not be evaluated on the given sequence, e.g. a tabular
// function queried beyond its table depth or on a missing entry.
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqsub

#endif  // SEQSUB_ERROR_HPP_
