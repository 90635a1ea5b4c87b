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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qldi/symplectic.hpp"

namespace qldi {

class StabilizerCode;

using Matrix = std::vector<Vector>;

// Scalar arithmetic in Z_p. Inputs may be any signed value.
Int mod_reduce(Int a, Int p) noexcept;
Int mul_mod(Int a, Int b, Int p) noexcept;
Int add_mod(Int a, Int b, Int p) noexcept;
/// Multiplicative inverse; throws ParameterError when a is 0 mod p.
Int inverse_mod(Int a, Int p);

// Allowed code operations. Indices are zero-based here; the text form is one-based.

/// row[dst] += scalar * row[src]
struct RowAdd {
  std::size_t dst;
  std::size_t src;
  Int scalar;
  friend bool operator==(const RowAdd&, const RowAdd&) = default;
};
struct RowSwap {
  std::size_t a;
  std::size_t b;
  friend bool operator==(const RowSwap&, const RowSwap&) = default;
};
/// Scalar must be a unit of the tableau's ring (+-1 over the integers).
struct RowScale {
  std::size_t row;
  Int scalar;
  friend bool operator==(const RowScale&, const RowScale&) = default;
};
/// Swaps the column pairs (a, a+n) and (b, b+n).
struct RegisterSwap {
  std::size_t a;
  std::size_t b;
  friend bool operator==(const RegisterSwap&, const RegisterSwap&) = default;
};
/// Fourier conjugation of one register: (x, z) -> (-z, x).
struct HadamardSwap {
  std::size_t reg;
  friend bool operator==(const HadamardSwap&, const HadamardSwap&) = default;
};

using Operation = std::variant<RowAdd, RowSwap, RowScale, RegisterSwap, HadamardSwap>;
using OpScript = std::vector<Operation>;

/// Replays a script. In Modular(q) every step is reduced; over the integers nothing is.
/// Throws DimensionError on out-of-range indices, ParameterError on a non-unit RowScale.
Tableau apply_script(const Tableau& t, const OpScript& script);

struct RrefResult {
  Tableau tableau;
  std::size_t rank;
  OpScript script;
};

/// Reduced row echelon form over Z_p (pivots scaled to 1, cleared above and below).
RrefResult rref_mod(const Tableau& t, Int p);

/// Basis of {v : M v = 0 mod p}. `cols` is needed because M may have no rows.
Matrix kernel_mod(const Matrix& m, std::size_t cols, Int p);

/// Rank of M over Z_p.
std::size_t rank_mod(const Matrix& m, Int p);

/// Coefficients c with sum_i c_i rows[i] = v (mod p), or nullopt when v is outside the row space.
std::optional<Vector> in_rowspace(std::span<const Int> v, const Matrix& rows, Int p);
std::optional<Vector> in_rowspace(std::span<const Int> v, const Tableau& t, Int p);

/// Where each canonical register came from.
struct ColumnRecord {
  /// origin[c] = original register now sitting at canonical position c.
  std::vector<std::size_t> origin;
  /// Number of Fourier conjugations (mod 4) applied at canonical position c.
  std::vector<int> fourier_power;

  static ColumnRecord identity(std::size_t n);
  /// Tracks the register-level effect of a script (row operations are ignored).
  void apply(const OpScript& script);

  friend bool operator==(const ColumnRecord&, const ColumnRecord&) = default;
};

/// Generators reshaped to [I_{n-k} X2 | Z1 Z2] by allowed operations.
struct CanonicalForm {
  Tableau tableau;
  OpScript script;
  ColumnRecord columns;
};

/// Deterministic canonicalization.
///
/// For each target column j < n-k, in order: take the first unused row with a nonzero
/// X entry in column j; otherwise Hadamard register j and look again; otherwise swap in
/// the first later register whose X (then Z) column has a pivot. Pivots are scaled to 1
/// and the column is cleared in every other row. Throws DependentRowError if the
/// generators turn out to be dependent.
CanonicalForm canonical_form(const StabilizerCode& code);

}  // namespace qldi
