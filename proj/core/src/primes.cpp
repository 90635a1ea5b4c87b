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

#include "qldi/primes.hpp"

#include <array>

#include "qldi/errors.hpp"

namespace qldi {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

// Bases that make Miller-Rabin exact below 3.3e24 (Sorenson & Webster).
constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod_u64(r, b, m);
    b = mul_mod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const BigInt& n, unsigned a) {
  BigInt d = n - 1;
  mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const BigInt n_minus_1 = n - 1;
  BigInt x;
  BigInt base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p() && n.get_ui() < kTrialLimit) {
    const auto v = static_cast<std::uint32_t>(n.get_ui());
    for (std::uint32_t p : small_primes()) {
      if (std::uint64_t{p} * p > v) return true;
      if (v % p == 0) return v == p;
    }
    return true;
  }
  for (std::uint32_t p : small_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  for (unsigned a : kWitnesses) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

BigInt next_prime_above(const BigInt& x) {
  if (x < 2) return 2;
  BigInt c = x + 1;
  if (c != 2 && mpz_even_p(c.get_mpz_t())) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

std::vector<Int> primes_between(Int lo, Int hi) {
  std::vector<Int> out;
  if (hi < 2 || hi < lo) return out;
  for (Int v = std::max<Int>(lo, 2); v <= hi; ++v) {
    if (is_prime(static_cast<std::uint64_t>(v))) out.push_back(v);
  }
  return out;
}

}  // namespace qldi
