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

#include "qldi/symplectic.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "qldi/errors.hpp"
#include "qldi/primes.hpp"

namespace qldi {

namespace {

Int checked_narrow(__int128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw ParameterError("integer overflow in symplectic product");
  }
  return static_cast<Int>(v);
}

std::string power_token(char letter, Int e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, letter);
  return std::string(1, letter) + "^{" + std::to_string(e) + "}";
}

}  // namespace

Context Context::modular(Int q) {
  if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
    throw ParameterError("local dimension " + std::to_string(q) + " is not prime");
  }
  return Context(q);
}

Int Context::reduce(Int v) const noexcept {
  if (modulus_ == 0) return v;
  Int r = v % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::string Context::to_string() const {
  return is_modular() ? "mod " + std::to_string(modulus_) : "integers";
}

PauliWord::PauliWord(std::vector<SitePower> sites, Context ctx)
    : sites_(std::move(sites)), ctx_(ctx) {
  if (sites_.empty()) throw DimensionError("a Pauli word needs at least one register");
  for (auto& s : sites_) {
    s.x = ctx_.reduce(s.x);
    s.z = ctx_.reduce(s.z);
  }
}

PauliWord PauliWord::identity(std::size_t n, Context ctx) {
  return PauliWord(std::vector<SitePower>(n), ctx);
}

PauliWord PauliWord::from_letters(std::string_view letters) {
  std::vector<SitePower> sites;
  sites.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'I': sites.push_back({0, 0}); break;
      case 'X': sites.push_back({1, 0}); break;
      case 'Y': sites.push_back({1, 1}); break;
      case 'Z': sites.push_back({0, 1}); break;
      default:
        throw ValidationError(std::string("unknown Pauli letter '") + c + "'");
    }
  }
  return PauliWord(std::move(sites), Context::modular(2));
}

std::string PauliWord::to_string() const {
  if (ctx_.modulus() == 2) {
    std::string out;
    for (const auto& s : sites_) {
      out += s.x ? (s.z ? 'Y' : 'X') : (s.z ? 'Z' : 'I');
    }
    return out;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (i) os << ' ';
    const auto& s = sites_[i];
    if (s.is_identity()) {
      os << 'I';
    } else {
      os << power_token('X', s.x) << power_token('Z', s.z);
    }
  }
  return os.str();
}

Vector phi_encode(const PauliWord& word) {
  const std::size_t n = word.num_registers();
  Vector v(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = word[i].x;
    v[n + i] = word[i].z;
  }
  return v;
}

PauliWord phi_decode(std::span<const Int> v, Int q) {
  if (v.size() % 2 != 0) {
    throw DimensionError("malformed vector: odd length " + std::to_string(v.size()));
  }
  const std::size_t n = v.size() / 2;
  std::vector<SitePower> sites(n);
  for (std::size_t i = 0; i < n; ++i) sites[i] = {v[i], v[n + i]};
  return PauliWord(std::move(sites), Context::modular(q));
}

Int symplectic_product(std::span<const Int> u, std::span<const Int> v, const Context& ctx) {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw DimensionError("symplectic product of vectors with lengths " +
                         std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  const std::size_t n = u.size() / 2;
  __int128 acc = 0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += static_cast<__int128>(v[n + k]) * u[k] - static_cast<__int128>(v[k]) * u[n + k];
  }
  if (ctx.is_modular()) {
    __int128 r = acc % ctx.modulus();
    if (r < 0) r += ctx.modulus();
    return static_cast<Int>(r);
  }
  return checked_narrow(acc);
}

std::size_t weight(const PauliWord& word) {
  return static_cast<std::size_t>(
      std::count_if(word.sites().begin(), word.sites().end(),
                    [](const SitePower& s) { return !s.is_identity(); }));
}

std::size_t weight(std::span<const Int> v) {
  const std::size_t n = v.size() / 2;
  std::size_t w = 0;
  for (std::size_t k = 0; k < n; ++k) w += (v[k] != 0 || v[n + k] != 0) ? 1 : 0;
  return w;
}

Tableau::Tableau(std::size_t n, std::vector<Vector> rows, Context ctx)
    : n_(n), rows_(std::move(rows)), ctx_(ctx) {
  if (n_ == 0) throw DimensionError("a tableau needs at least one register");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != 2 * n_) {
      throw DimensionError("row " + std::to_string(r + 1) + " has " +
                           std::to_string(rows_[r].size()) + " entries, expected " +
                           std::to_string(2 * n_));
    }
    for (auto& e : rows_[r]) e = ctx_.reduce(e);
  }
}

Tableau Tableau::reduced(Int p) const { return Tableau(n_, rows_, Context::modular(p)); }

Tableau Tableau::lifted() const { return Tableau(n_, rows_, Context::integers()); }

PauliWord Tableau::word(std::size_t r) const {
  std::vector<SitePower> sites(n_);
  for (std::size_t i = 0; i < n_; ++i) sites[i] = {rows_[r][i], rows_[r][n_ + i]};
  return PauliWord(std::move(sites), ctx_);
}

GramMatrix::GramMatrix(std::vector<Vector> entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_) {
    if (row.size() != entries_.size()) throw DimensionError("Gram matrix must be square");
  }
}

bool GramMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Vector& r) {
    return std::all_of(r.begin(), r.end(), [](Int e) { return e == 0; });
  });
}

bool GramMatrix::is_antisymmetric() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (entries_[i][j] != -entries_[j][i]) return false;
    }
  }
  return true;
}

Int GramMatrix::max_abs() const noexcept {
  Int m = 0;
  for (const auto& r : entries_) {
    for (Int e : r) m = std::max(m, e < 0 ? -e : e);
  }
  return m;
}

GramMatrix gram(const Tableau& t) {
  const std::size_t m = t.num_rows();
  std::vector<Vector> g(m, Vector(m, 0));
  const auto ints = Context::integers();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      g[i][j] = symplectic_product(t.row(i), t.row(j), ints);
      g[j][i] = -g[i][j];
    }
  }
  return GramMatrix(std::move(g));
}

}  // namespace qldi
