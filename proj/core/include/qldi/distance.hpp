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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qldi/ldi.hpp"
#include "qldi/symplectic.hpp"

namespace qldi {

enum class ErrorClass {
  Unavoidable,  ///< integer syndrome is exactly zero
  Artifact,     ///< some integer syndrome entry is a nonzero multiple of p
};

std::string_view to_string(ErrorClass c) noexcept;

/// An undetectable error that is not a stabilizer.
struct ErrorWitness {
  PauliWord word;
  std::size_t weight;
  Vector syndrome_int;
  Vector syndrome_mod;
  ErrorClass classification;
  bool in_group;

  friend bool operator==(const ErrorWitness&, const ErrorWitness&) = default;
};

struct DistanceReport {
  Int prime = 2;
  std::size_t max_weight_searched = 0;
  /// nullopt means "greater than max_weight_searched".
  std::optional<std::size_t> distance;
  std::optional<ErrorWitness> witness;
  bool degenerate = false;
  /// Smallest weight of a nonzero stabilizer; nullopt means "> max_weight_searched".
  std::optional<std::size_t> min_stabilizer_weight;
  double millis = 0.0;
};

struct Syndrome {
  Vector integer;
  Vector modular;
};

/// Row-by-row symplectic products of t (lifted to the integers) against e, and their residues mod p.
Syndrome syndrome(const Tableau& t, std::span<const Int> e, Int p);

/// Unavoidable iff the integer syndrome is zero. Throws ContractViolation if the
/// syndrome is not zero mod p, i.e. the error is detectable.
ErrorClass classify(std::span<const Int> syndrome_int, Int p);

struct SupportDims {
  std::size_t kernel_dim;  ///< errors supported in T that commute with every row mod p
  std::size_t group_dim;   ///< stabilizers supported in T
};

/// Rank analysis restricted to the registers in `support` (zero-based, distinct).
/// Throws ParameterError on an empty support.
SupportDims support_logical_dims(const Tableau& t, Int p, std::span<const std::size_t> support);
SupportDims support_logical_dims(const LdiForm& ldi, Int p, std::span<const std::size_t> support);

/// Smallest support size w <= w_max admitting an undetectable non-stabilizer over Z_p.
/// Supports are visited in lexicographic order, so results are reproducible.
DistanceReport distance_search(const Tableau& t, Int p, std::size_t w_max);
DistanceReport distance_search(const LdiForm& ldi, Int p, std::size_t w_max);

/// One independent distance_search per prime, in the given order. Throws ParameterError
/// if any entry is not prime.
std::vector<DistanceReport> scan_primes(const LdiForm& ldi, std::span<const Int> primes,
                                        std::size_t w_max);

/// True when no undetectable non-stabilizer of weight below `declared_d` was found.
bool preserves_distance(const DistanceReport& report, std::size_t declared_d);

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

/// Brute force over every error of weight <= w_max. Exists to cross-check distance_search.
/// Throws BudgetExceeded when the number of candidates would exceed `budget`.
DistanceReport enumeration_oracle(const Tableau& t, Int p, std::size_t w_max,
                                  std::uint64_t budget = kDefaultOracleBudget);
DistanceReport enumeration_oracle(const LdiForm& ldi, Int p, std::size_t w_max,
                                  std::uint64_t budget = kDefaultOracleBudget);

}  // namespace qldi
