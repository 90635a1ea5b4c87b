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

#include <optional>
#include <string>
#include <string_view>

#include "qldi/modular_linalg.hpp"
#include "qldi/stabilizer_code.hpp"
#include "qldi/symplectic.hpp"

namespace qldi {

/// Which pairwise products the correction matrix keeps.
enum class LVariant {
  Full,       ///< lower triangle (i > j)
  PlusOnly,   ///< positive products, both triangles
  MinusOnly,  ///< negative products, both triangles
};

std::string_view to_string(LVariant v) noexcept;
/// Accepts "full", "plus", "minus". Throws ParameterError otherwise.
LVariant parse_variant(std::string_view name);

/// A generator tableau whose rows commute exactly over the integers.
struct LdiForm {
  Tableau tableau;  ///< integer context, canonical register order
  LVariant variant;
  Int B;            ///< max |entry| of tableau
  Int source_q;
  std::size_t k;
  Matrix L;         ///< correction added to the Z1 block
  /// The mod-q generators the correction was added to. tableau reduced mod source_q equals base.
  Tableau base;
  /// Absent when the supplied generators already commuted over the integers and were kept.
  std::optional<CanonicalForm> canonical;
  /// True when the variant's correction left residual products that had to be cancelled.
  bool repaired = false;
};

struct LdiOptions {
  /// Keep the supplied generators (L = 0) when their residues already commute over the integers.
  bool reuse_commuting_generators = true;
};

/// Correction matrix for the chosen variant. Throws ParameterError if g is not antisymmetric.
Matrix build_L(const GramMatrix& g, LVariant variant);

/// Canonicalizes the code and adds the variant's correction to the Z1 block.
///
/// Canonicalization works mod q and can destroy integer orthogonality that the supplied
/// generators already had (the five-qubit code is the standard example), so by default
/// such generators are returned unchanged instead.
LdiForm ldi_transform(const StabilizerCode& code, LVariant variant, LdiOptions options = {});

/// Every pairwise product vanishes over the integers.
bool is_ldi(const Tableau& t);

/// Largest absolute entry (0 for an empty tableau).
Int max_entry(const Tableau& t);

}  // namespace qldi
