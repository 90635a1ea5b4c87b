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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qldi {

using Int = std::int64_t;
using Vector = std::vector<Int>;

/// Arithmetic context for exponents: residues mod a prime q, or unreduced integers.
class Context {
 public:
  /// Unreduced signed integers (the phi_infinity picture).
  static Context integers() noexcept { return Context(0); }
  /// Residues mod a prime. Throws ParameterError if q is not prime.
  static Context modular(Int q);

  bool is_modular() const noexcept { return modulus_ != 0; }
  /// The prime modulus, or 0 in the integer context.
  Int modulus() const noexcept { return modulus_; }
  /// Maps v into {0,...,q-1}; identity in the integer context.
  Int reduce(Int v) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  explicit Context(Int m) noexcept : modulus_(m) {}
  Int modulus_;
};

/// Exponents of X and Z on one register. Phases are never tracked.
struct SitePower {
  Int x = 0;
  Int z = 0;

  bool is_identity() const noexcept { return x == 0 && z == 0; }
  friend bool operator==(const SitePower&, const SitePower&) = default;
};

/// An n-register generalized Pauli operator, up to global phase.
class PauliWord {
 public:
  /// Sites are reduced into the context on construction. Throws DimensionError for n = 0.
  PauliWord(std::vector<SitePower> sites, Context ctx);

  static PauliWord identity(std::size_t n, Context ctx);
  /// Parses an I/X/Y/Z string (qubits only). Y is X^1 Z^1.
  static PauliWord from_letters(std::string_view letters);

  std::size_t num_registers() const noexcept { return sites_.size(); }
  const SitePower& operator[](std::size_t i) const { return sites_[i]; }
  std::span<const SitePower> sites() const noexcept { return sites_; }
  const Context& context() const noexcept { return ctx_; }

  /// Letters when the context is mod 2, otherwise space-separated powers such as X^{-1}Z^{2}.
  std::string to_string() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  std::vector<SitePower> sites_;
  Context ctx_;
};

/// Row vector (x_1..x_n | z_1..z_n).
Vector phi_encode(const PauliWord& word);

/// Inverse of phi_encode with entries reduced mod q. Throws DimensionError on odd length.
PauliWord phi_decode(std::span<const Int> v, Int q);

/// Sum over registers of v_z*u_x - v_x*u_z, taken in the given context.
Int symplectic_product(std::span<const Int> u, std::span<const Int> v, const Context& ctx);

/// Number of registers carrying a non-identity operator.
std::size_t weight(const PauliWord& word);

/// Same count for a raw 2n vector.
std::size_t weight(std::span<const Int> v);

/// m generator rows of length 2n; X exponents in columns [0,n), Z exponents in [n,2n).
class Tableau {
 public:
  Tableau(std::size_t n, std::vector<Vector> rows, Context ctx);

  std::size_t num_registers() const noexcept { return n_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const Vector& row(std::size_t i) const { return rows_[i]; }
  Int at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Context& context() const noexcept { return ctx_; }

  /// Entrywise reduction into Modular(p).
  Tableau reduced(Int p) const;
  /// Same entries, integer context. Residues are kept verbatim.
  Tableau lifted() const;

  PauliWord word(std::size_t r) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::size_t n_;
  std::vector<Vector> rows_;
  Context ctx_;
};

/// Antisymmetric matrix of pairwise integer symplectic products.
class GramMatrix {
 public:
  explicit GramMatrix(std::vector<Vector> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  Int operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<Vector>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;
  bool is_antisymmetric() const noexcept;
  /// max |entry|
  Int max_abs() const noexcept;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  std::vector<Vector> entries_;
};

/// Pairwise products over the integers, whatever the tableau's context.
GramMatrix gram(const Tableau& t);

}  // namespace qldi
