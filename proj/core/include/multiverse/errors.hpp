// Copyright 2026 The Multiverse Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace multiverse {

/// Base class for every domain error raised by the core library. The CLI
/// maps anything deriving from this to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A value that has no exact rational form (e.g. cos^2 of an angle outside
/// the exact whitelist).
class NotExactlyRepresentable : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A query a symbolic PowerKernel cannot answer without materializing.
class UnsupportedQuery : public Error {
 public:
  using Error::Error;
};

class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

class IndivisibleEnsemble : public Error {
 public:
  using Error::Error;
};

class NoReversingFrame : public Error {
 public:
  using Error::Error;
};

class CellBudgetExceeded : public Error {
 public:
  CellBudgetExceeded(std::string what, long long step)
      : Error(std::move(what)), step_(step) {}
  long long step() const noexcept { return step_; }

 private:
  long long step_;
};

/// Malformed input file or text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace multiverse
