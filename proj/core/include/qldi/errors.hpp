// Copyright 2026 The qldi Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qldi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric parameter is out of its domain (non-prime modulus, empty support, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix shapes do not line up, or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input text or a generator set does not describe a valid stabilizer code.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A generator is a linear combination of earlier generators.
class DependentRowError : public ValidationError {
 public:
  DependentRowError(std::size_t row, const std::string& what)
      : ValidationError(what), row_(row) {}
  /// Zero-based index of the redundant generator.
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// A formula was asked for outside the regime where it is defined.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would exceed the configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qldi
