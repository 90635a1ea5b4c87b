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
#include <optional>

#include "qldi/symplectic.hpp"

namespace qldi {

struct CodeParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  Int q = 2;
  std::optional<std::size_t> d;

  friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

/// A generator tableau over Z_q that has passed validation: n-k rows, pairwise
/// commuting mod q and independent mod q.
class StabilizerCode {
 public:
  /// Reduces the rows mod q and validates them. Throws ValidationError (or
  /// DependentRowError) naming the first offending row or pair.
  static StabilizerCode validate(const Tableau& generators, CodeParameters params);

  const Tableau& tableau() const noexcept { return tableau_; }
  const CodeParameters& params() const noexcept { return params_; }
  std::size_t n() const noexcept { return params_.n; }
  std::size_t k() const noexcept { return params_.k; }
  Int q() const noexcept { return params_.q; }
  std::optional<std::size_t> declared_distance() const noexcept { return params_.d; }

 private:
  StabilizerCode(Tableau t, CodeParameters p) : tableau_(std::move(t)), params_(p) {}
  Tableau tableau_;
  CodeParameters params_;
};

}  // namespace qldi
