// Copyright 2026 The nevlab Authors.
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

namespace nevlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (polynomial literals, function specs, scenarios).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured work budget (reductions, terms, nodes, precision) ran out.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The input is mathematically degenerate for the requested quantity.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// An operation is not closed over the given function representations.
class UnsupportedVariant : public Error {
 public:
  using Error::Error;
};

/// A numerical estimate could not be certified or did not converge.
class EstimationError : public Error {
 public:
  using Error::Error;
};

}  // namespace nevlab
