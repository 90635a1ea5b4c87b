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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qldi/primes.hpp"
#include "qldi/stabilizer_code.hpp"

namespace qldi {

/// How the ambiguous degenerate cutoff expression is parsed.
///
/// Decided: Ctilde = ((q-1)^2 (2d-3))^(d - 3/2) and the whole product
///   (q-1) 2(d-1) B (1 + (q-1) Ctilde (2(d-1))^2) raised to 2(d-1).
/// Strict: Ctilde exponent (d-3)/2, and only the B(...) group is raised,
///   the leading (q-1) 2(d-1) factor is left outside.
enum class Reading { Decided, Strict };

std::string_view to_string(Reading r) noexcept;

/// B^(2(d-1)) (2(d-1))^(d-1), exact. Throws ParameterError for d = 0.
BigInt p_star_original(const BigInt& B, unsigned d);

/// Ceiling of (B(q-1)(d-1)(1 + (d-1)^2 (q-1)^(d-1) (d-2)^((d-2)/2)))^(d-1),
/// evaluated with upward rounding. 0^0 is taken as 1.
BigInt p_star_alternative(const BigInt& B, unsigned d, std::int64_t q);

struct DegenerateCutoff {
  BigInt doubled_original;   ///< B^(4(d-1)) (4(d-1))^(2(d-1))
  BigInt doubled_alternative;  ///< ceiling of the determinant-technique term
  BigInt value;              ///< min of the two
  Reading reading;
};

DegenerateCutoff p_d_star_terms(const BigInt& B, unsigned d, std::int64_t q,
                                Reading reading = Reading::Decided);
BigInt p_d_star(const BigInt& B, unsigned d, std::int64_t q, Reading reading = Reading::Decided);

/// A decimal rendered with a fixed number of significant digits, rounded down.
struct LowerDecimal {
  std::string text;
  int significant_digits;
  double approx;  ///< nearest double, for display and coarse comparisons only
};

/// sqrt(1 + C(n,t)^(1/((n-k)-t))) with t = floor((d-1)/2), rounded down to 15 digits.
/// Throws NotApplicableError when n-k <= t.
LowerDecimal p_double_star(std::size_t n, std::size_t k, std::size_t d);

struct HammingSides {
  BigInt lhs;  ///< q^k * sum_{j<=t} C(n,j) (q^2-1)^j
  BigInt rhs;  ///< q^n
};
HammingSides hamming_sides(std::size_t n, std::size_t k, std::size_t d, std::int64_t q);
bool hamming_bound_holds(std::size_t n, std::size_t k, std::size_t d, std::int64_t q);

struct BoundsReport {
  BigInt B;
  std::int64_t q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  BigInt p_star_original;
  BigInt p_star_alternative;
  BigInt p_star_effective;
  bool degenerate = false;
  std::optional<DegenerateCutoff> p_d_star;  ///< present for degenerate codes
  bool hamming_applicable = false;
  std::optional<LowerDecimal> p_double_star;  ///< present only when hamming_applicable
  std::string p_double_star_note;             ///< reason when absent
  BigInt first_safe_prime;
  Reading reading = Reading::Decided;
};

/// Evaluates every cutoff for a code with max LDI entry B. `degenerate` decides whether
/// the degenerate cutoff participates and whether the lower cutoff may be reported.
BoundsReport evaluate_bounds(const BigInt& B, const CodeParameters& params, bool degenerate,
                             Reading reading = Reading::Decided);

}  // namespace qldi
