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


#include <gtest/gtest.h>

#include "qldi/primes.hpp"

namespace qldi {
namespace {

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

TEST(NextPrimeAbove, Examples) {
  EXPECT_EQ(next_prime_above(BigInt(4096)), 4099);
  EXPECT_EQ(next_prime_above(BigInt(1)), 2);
  EXPECT_EQ(next_prime_above(BigInt(2)), 3);
  EXPECT_EQ(next_prime_above(BigInt(0)), 2);
  EXPECT_EQ(next_prime_above(BigInt(16)), 17);
}

TEST(IsPrime, AgreesWithTrialDivisionBelowOneHundredThousand) {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    ASSERT_EQ(is_prime(n), trial_division(n)) << n;
    ASSERT_EQ(is_prime(BigInt(static_cast<unsigned long>(n))), trial_division(n)) << n;
  }
}

TEST(IsPrime, StrongPseudoprimesRejected) {
  // Strong pseudoprimes to several small bases.
  for (std::uint64_t n : {2047ull, 1373653ull, 25326001ull, 3215031751ull, 2152302898747ull,
                          3474749660383ull, 341550071728321ull, 3825123056546413051ull}) {
    EXPECT_FALSE(is_prime(n)) << n;
    EXPECT_FALSE(is_prime(BigInt(std::to_string(n)))) << n;
  }
}

TEST(IsPrime, LargeKnownValues) {
  EXPECT_TRUE(is_prime(BigInt("18446744073709551557")));  // largest prime below 2^64
  EXPECT_TRUE(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
  EXPECT_FALSE(is_prime(BigInt("170141183460469231731687303715884105729")));
  EXPECT_EQ(next_prime_above(BigInt("18446744073709551557")), BigInt("18446744073709551629"));
}

TEST(PrimesBetween, Ranges) {
  EXPECT_EQ(primes_between(3, 13), (std::vector<Int>{3, 5, 7, 11, 13}));
  EXPECT_EQ(primes_between(2, 5), (std::vector<Int>{2, 3, 5}));
  EXPECT_TRUE(primes_between(24, 28).empty());
}

}  // namespace
}  // namespace qldi
