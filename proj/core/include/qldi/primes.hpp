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
#include <vector>

#include <gmpxx.h>

#include "qldi/symplectic.hpp"

namespace qldi {

using BigInt = mpz_class;

/// Deterministic Miller-Rabin over the first twelve prime bases (exact for all 64-bit n).
bool is_prime(std::uint64_t n);

/// Trial division below 10^6, then Miller-Rabin with a fixed witness set.
/// The witness set is a proof of primality below 3.3e24.
bool is_prime(const BigInt& n);

/// Smallest prime strictly greater than x (2 for any x < 2).
BigInt next_prime_above(const BigInt& x);

/// All primes p with lo <= p <= hi, ascending.
std::vector<Int> primes_between(Int lo, Int hi);

}  // namespace qldi
