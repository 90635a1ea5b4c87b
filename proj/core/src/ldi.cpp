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

#include "qldi/ldi.hpp"

#include <algorithm>
#include <string>

#include "qldi/errors.hpp"

namespace qldi {

std::string_view to_string(LVariant v) noexcept {
  switch (v) {
    case LVariant::Full: return "full";
    case LVariant::PlusOnly: return "plus";
    case LVariant::MinusOnly: return "minus";
  }
  return "full";
}

LVariant parse_variant(std::string_view name) {
  if (name == "full") return LVariant::Full;
  if (name == "plus") return LVariant::PlusOnly;
  if (name == "minus") return LVariant::MinusOnly;
  throw ParameterError("unknown variant '" + std::string(name) + "' (expected full, plus or minus)");
}

Matrix build_L(const GramMatrix& g, LVariant variant) {
  if (!g.is_antisymmetric()) throw ParameterError("build_L: Gram matrix is not antisymmetric");
  const std::size_t m = g.size();
  Matrix L(m, Vector(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Int v = g(i, j);
      switch (variant) {
        case LVariant::Full: L[i][j] = i > j ? v : 0; break;
        case LVariant::PlusOnly: L[i][j] = v > 0 ? v : 0; break;
        case LVariant::MinusOnly: L[i][j] = v < 0 ? v : 0; break;
      }
    }
  }
  return L;
}

namespace {

// Adds M to the Z1 block (rows x first m Z columns) of integer rows.
void add_to_z1(std::vector<Vector>& rows, std::size_t n, const Matrix& M) {
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < M.size(); ++j) rows[i][n + j] += M[i][j];
  }
}

}  // namespace

LdiForm ldi_transform(const StabilizerCode& code, LVariant variant, LdiOptions options) {
  const std::size_t n = code.n();
  const std::size_t m = code.tableau().num_rows();
  if (options.reuse_commuting_generators && is_ldi(code.tableau().lifted())) {
    Tableau kept = code.tableau().lifted();
    const Int B = max_entry(kept);
    return LdiForm{std::move(kept), variant, B, code.q(), code.k(), Matrix(m, Vector(m, 0)),
                   code.tableau(), std::nullopt, false};
  }

  CanonicalForm canon = canonical_form(code);
  const Tableau start = canon.tableau.lifted();
  Matrix L = build_L(gram(start), variant);

  std::vector<Vector> rows = start.rows();
  add_to_z1(rows, n, L);

  bool repaired = false;
  GramMatrix residual = gram(Tableau(n, rows, Context::integers()));
  if (!residual.is_zero()) {
    // Cancel what the variant left behind with the lower-triangle rule.
    Matrix fix = build_L(residual, LVariant::Full);
    add_to_z1(rows, n, fix);
    for (std::size_t i = 0; i < L.size(); ++i) {
      for (std::size_t j = 0; j < L.size(); ++j) L[i][j] += fix[i][j];
    }
    repaired = true;
  }

  Tableau out(n, std::move(rows), Context::integers());
  if (!is_ldi(out)) throw ContractViolation("LDI correction failed to cancel every product");
  const Int B = max_entry(out);
  Tableau base = canon.tableau;
  return LdiForm{std::move(out), variant, B, code.q(), code.k(), std::move(L), std::move(base),
                 std::move(canon), repaired};
}

bool is_ldi(const Tableau& t) { return gram(t).is_zero(); }

Int max_entry(const Tableau& t) {
  Int b = 0;
  for (const auto& row : t.rows()) {
    for (Int v : row) b = std::max(b, v < 0 ? -v : v);
  }
  return b;
}

}  // namespace qldi
