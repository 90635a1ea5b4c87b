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

#include <string>
#include <string_view>
#include <vector>

#include "qldi/bounds.hpp"
#include "qldi/distance.hpp"
#include "qldi/ldi.hpp"
#include "qldi/modular_linalg.hpp"
#include "qldi/stabilizer_code.hpp"

namespace qldi {

// Code files
//
//   # comment
//   n=6 k=1 q=2 d=3
//   YIZXYI
//   ...
//
// or, for any prime q, one symplectic row per generator:
//
//   x: 1 0 0 1 1 0 ; z: 1 0 1 0 1 0
//
// The header must come before the first generator; d is optional. Mixing the two
// generator formats in one file is rejected.

enum class CodeFormat { Letters, Symplectic };

/// Parses and validates. Throws ValidationError with a line number or the offending pair.
StabilizerCode parse_code(std::string_view text);
/// Letters requires q = 2.
std::string serialize_code(const StabilizerCode& code, CodeFormat format);

// Op scripts: one operation per line, one-based indices, '#' comments.
//   rowswap I J | rowadd DST SRC COEFF | rowscale I COEFF | regswap I J | hadamard I

OpScript parse_script(std::string_view text);
std::string serialize_script(const OpScript& script);

// JSON reports. Field order is fixed, big integers are decimal strings and every
// top-level object carries "schema": 1.

inline constexpr int kSchemaVersion = 1;

std::string code_to_json(const StabilizerCode& code);
std::string tableau_to_json(const Tableau& t);
std::string canonical_to_json(const CanonicalForm& c);
std::string ldi_to_json(const LdiForm& ldi);
std::string bounds_to_json(const BoundsReport& report);
std::string distance_to_json(const DistanceReport& report);
std::string scan_to_json(const std::vector<DistanceReport>& reports,
                         std::optional<std::size_t> declared_d);

/// Reads back what distance_to_json wrote. Throws ValidationError on malformed input.
DistanceReport distance_from_json(std::string_view json);

/// Fixed-width text rendering "x... | z..." for terminal output.
std::string format_tableau(const Tableau& t);

}  // namespace qldi
