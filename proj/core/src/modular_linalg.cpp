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

#include "qldi/modular_linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qldi/errors.hpp"
#include "qldi/stabilizer_code.hpp"

namespace qldi {

Int mod_reduce(Int a, Int p) noexcept {
  Int r = a % p;
  return r < 0 ? r + p : r;
}

Int mul_mod(Int a, Int b, Int p) noexcept {
  __int128 r = static_cast<__int128>(mod_reduce(a, p)) * mod_reduce(b, p) % p;
  return static_cast<Int>(r);
}

Int add_mod(Int a, Int b, Int p) noexcept {
  return mod_reduce(mod_reduce(a, p) + mod_reduce(b, p), p);
}

Int inverse_mod(Int a, Int p) {
  Int r0 = p, r1 = mod_reduce(a, p);
  Int s0 = 0, s1 = 1;
  if (r1 == 0) throw ParameterError("0 has no inverse mod " + std::to_string(p));
  while (r1 != 0) {
    const Int quo = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - quo * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - quo * s1};
  }
  if (r0 != 1) throw ParameterError(std::to_string(a) + " is not a unit mod " + std::to_string(p));
  return mod_reduce(s0, p);
}

namespace {

void require_prime(Int p) { (void)Context::modular(p); }

struct Elimination {
  Matrix m;
  std::vector<std::size_t> pivot_cols;
  OpScript script;
};

// Gauss-Jordan over Z_p. Entries of `m` must already be reduced.
Elimination eliminate(Matrix m, std::size_t cols, Int p) {
  Elimination e;
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      std::swap(m[piv], m[rank]);
      e.script.push_back(RowSwap{rank, piv});
    }
    if (m[rank][c] != 1) {
      const Int inv = inverse_mod(m[rank][c], p);
      for (auto& v : m[rank]) v = mul_mod(v, inv, p);
      e.script.push_back(RowScale{rank, inv});
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Int coeff = p - m[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = add_mod(m[i][j], mul_mod(coeff, m[rank][j], p), p);
      }
      e.script.push_back(RowAdd{i, rank, coeff});
    }
    e.pivot_cols.push_back(c);
    ++rank;
  }
  e.m = std::move(m);
  return e;
}

Matrix reduced_copy(const Matrix& m, Int p) {
  Matrix out = m;
  for (auto& row : out) {
    for (auto& v : row) v = mod_reduce(v, p);
  }
  return out;
}

void check_index(std::size_t i, std::size_t bound, const char* what) {
  if (i >= bound) {
    throw DimensionError(std::string(what) + " index " + std::to_string(i + 1) +
                         " out of range 1.." + std::to_string(bound));
  }
}

}  // namespace

Tableau apply_script(const Tableau& t, const OpScript& script) {
  const Context ctx = t.context();
  const std::size_t n = t.num_registers();
  const std::size_t m = t.num_rows();
  std::vector<Vector> rows = t.rows();

  auto fix = [&](Int v) { return ctx.reduce(v); };

  for (const auto& op : script) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, RowAdd>) {
            check_index(o.dst, m, "row");
            check_index(o.src, m, "row");
            if (o.dst == o.src) throw ParameterError("rowadd needs two distinct rows");
            for (std::size_t c = 0; c < 2 * n; ++c) {
              if (ctx.is_modular()) {
                rows[o.dst][c] = add_mod(rows[o.dst][c], mul_mod(o.scalar, rows[o.src][c], ctx.modulus()),
                                         ctx.modulus());
              } else {
                rows[o.dst][c] += o.scalar * rows[o.src][c];
              }
            }
          } else if constexpr (std::is_same_v<T, RowSwap>) {
            check_index(o.a, m, "row");
            check_index(o.b, m, "row");
            std::swap(rows[o.a], rows[o.b]);
          } else if constexpr (std::is_same_v<T, RowScale>) {
            check_index(o.row, m, "row");
            const bool unit = ctx.is_modular() ? mod_reduce(o.scalar, ctx.modulus()) != 0
                                               : (o.scalar == 1 || o.scalar == -1);
            if (!unit) throw ParameterError("rowscale by non-unit " + std::to_string(o.scalar));
            for (auto& v : rows[o.row]) {
              v = ctx.is_modular() ? mul_mod(v, o.scalar, ctx.modulus()) : v * o.scalar;
            }
          } else if constexpr (std::is_same_v<T, RegisterSwap>) {
            check_index(o.a, n, "register");
            check_index(o.b, n, "register");
            for (auto& r : rows) {
              std::swap(r[o.a], r[o.b]);
              std::swap(r[n + o.a], r[n + o.b]);
            }
          } else if constexpr (std::is_same_v<T, HadamardSwap>) {
            check_index(o.reg, n, "register");
            for (auto& r : rows) {
              const Int x = r[o.reg];
              r[o.reg] = fix(-r[n + o.reg]);
              r[n + o.reg] = x;
            }
          }
        },
        op);
  }
  return Tableau(n, std::move(rows), ctx);
}

RrefResult rref_mod(const Tableau& t, Int p) {
  require_prime(p);
  const Tableau red = t.reduced(p);
  auto e = eliminate(red.rows(), 2 * t.num_registers(), p);
  const std::size_t rank = e.pivot_cols.size();
  return {Tableau(t.num_registers(), std::move(e.m), Context::modular(p)), rank, std::move(e.script)};
}

std::size_t rank_mod(const Matrix& m, Int p) {
  if (m.empty()) return 0;
  return eliminate(reduced_copy(m, p), m.front().size(), p).pivot_cols.size();
}

Matrix kernel_mod(const Matrix& m, std::size_t cols, Int p) {
  for (const auto& r : m) {
    if (r.size() != cols) throw DimensionError("kernel_mod: ragged matrix");
  }
  auto e = eliminate(reduced_copy(m, p), cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      v[e.pivot_cols[i]] = mod_reduce(-e.m[i][f], p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> in_rowspace(std::span<const Int> v, const Matrix& rows, Int p) {
  require_prime(p);
  const std::size_t m = rows.size();
  const std::size_t len = v.size();
  for (const auto& r : rows) {
    if (r.size() != len) throw DimensionError("in_rowspace: vector and rows differ in length");
  }
  // Solve rows^T c = v via the augmented system [rows^T | v].
  Matrix aug(len, Vector(m + 1, 0));
  for (std::size_t c = 0; c < len; ++c) {
    for (std::size_t r = 0; r < m; ++r) aug[c][r] = mod_reduce(rows[r][c], p);
    aug[c][m] = mod_reduce(v[c], p);
  }
  auto e = eliminate(std::move(aug), m + 1, p);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m) return std::nullopt;
  Vector coeffs(m, 0);
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) coeffs[e.pivot_cols[i]] = e.m[i][m];
  return coeffs;
}

std::optional<Vector> in_rowspace(std::span<const Int> v, const Tableau& t, Int p) {
  return in_rowspace(v, t.rows(), p);
}

ColumnRecord ColumnRecord::identity(std::size_t n) {
  ColumnRecord rec;
  rec.origin.resize(n);
  for (std::size_t i = 0; i < n; ++i) rec.origin[i] = i;
  rec.fourier_power.assign(n, 0);
  return rec;
}

void ColumnRecord::apply(const OpScript& script) {
  for (const auto& op : script) {
    if (const auto* s = std::get_if<RegisterSwap>(&op)) {
      std::swap(origin[s->a], origin[s->b]);
      std::swap(fourier_power[s->a], fourier_power[s->b]);
    } else if (const auto* h = std::get_if<HadamardSwap>(&op)) {
      fourier_power[h->reg] = (fourier_power[h->reg] + 1) % 4;
    }
  }
}

CanonicalForm canonical_form(const StabilizerCode& code) {
  const std::size_t n = code.n();
  const Int q = code.q();
  const std::size_t r = code.tableau().num_rows();
  Matrix m = code.tableau().rows();
  std::vector<std::size_t> row_origin(r);
  for (std::size_t i = 0; i < r; ++i) row_origin[i] = i;
  OpScript script;

  auto first_row_with = [&](std::size_t start, std::size_t col) -> std::optional<std::size_t> {
    for (std::size_t i = start; i < r; ++i) {
      if (m[i][col] != 0) return i;
    }
    return std::nullopt;
  };
  auto hadamard = [&](std::size_t reg) {
    for (auto& row : m) {
      const Int x = row[reg];
      row[reg] = mod_reduce(-row[n + reg], q);
      row[n + reg] = x;
    }
    script.push_back(HadamardSwap{reg});
  };
  auto swap_registers = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) {
      std::swap(row[a], row[b]);
      std::swap(row[n + a], row[n + b]);
    }
    script.push_back(RegisterSwap{a, b});
  };

  for (std::size_t j = 0; j < r; ++j) {
    auto piv = first_row_with(j, j);
    if (!piv && first_row_with(j, n + j)) {
      hadamard(j);
      piv = first_row_with(j, j);
    }
    for (std::size_t other = j + 1; !piv && other < n; ++other) {
      if (first_row_with(j, other)) {
        swap_registers(j, other);
        piv = first_row_with(j, j);
      }
    }
    for (std::size_t other = j + 1; !piv && other < n; ++other) {
      if (first_row_with(j, n + other)) {
        swap_registers(j, other);
        hadamard(j);
        piv = first_row_with(j, j);
      }
    }
    if (!piv) {
      const std::size_t bad = row_origin[j];
      throw DependentRowError(bad, "generator " + std::to_string(bad + 1) +
                                       " is dependent on the others mod " + std::to_string(q));
    }
    if (*piv != j) {
      std::swap(m[*piv], m[j]);
      std::swap(row_origin[*piv], row_origin[j]);
      script.push_back(RowSwap{j, *piv});
    }
    if (m[j][j] != 1) {
      const Int inv = inverse_mod(m[j][j], q);
      for (auto& v : m[j]) v = mul_mod(v, inv, q);
      script.push_back(RowScale{j, inv});
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == j || m[i][j] == 0) continue;
      const Int coeff = q - m[i][j];
      for (std::size_t c = 0; c < 2 * n; ++c) m[i][c] = add_mod(m[i][c], mul_mod(coeff, m[j][c], q), q);
      script.push_back(RowAdd{i, j, coeff});
    }
  }

  CanonicalForm out{Tableau(n, std::move(m), Context::modular(q)), std::move(script),
                    ColumnRecord::identity(n)};
  out.columns.apply(out.script);
  return out;
}

}  // namespace qldi
