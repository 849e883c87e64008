// Copyright 2026 The tropdual Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace tropdual {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Vector lengths or numbers of variables do not match.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Operation is only defined for a restricted number of variables.
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// A candidate tropical zero of a matrix fails on at least one row.
class WitnessViolation : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these means either a
/// bug or a counterexample to a mathematical claim the code relies on.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tropdual
