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

#include "exact_bounds.hpp"
#include "qldi/bounds.hpp"
#include "qldi/errors.hpp"
#include "qldi/primes.hpp"

namespace qldi {
namespace {

using namespace testing;

std::string str(const Exact& x) { return x.str(); }
std::string str(const BigInt& x) { return x.get_str(); }

TEST(PStarOriginal, Examples) {
  EXPECT_EQ(p_star_original(1, 3), 16);
  EXPECT_EQ(p_star_original(1, 1), 1);
  EXPECT_EQ(p_star_original(5, 1), 1);
  EXPECT_EQ(p_star_original(0, 3), 0);
}

TEST(PStarAlternative, Examples) {
  EXPECT_EQ(p_star_alternative(1, 3, 2), 100);
  EXPECT_EQ(p_star_alternative(1, 1, 2), 1);
  EXPECT_EQ(p_star_alternative(3, 3, 2), 900);
}

TEST(PDStar, SixQubitCutoff) {
  const auto t = p_d_star_terms(1, 3, 2);
  EXPECT_EQ(t.doubled_original, 4096);
  EXPECT_EQ(t.value, 4096);
  EXPECT_EQ(str(t.doubled_alternative), str(oracle_degenerate_b(1, 3, 2)));
  EXPECT_EQ(str(t.doubled_alternative), "12829737244");
  EXPECT_GT(t.doubled_alternative, t.doubled_original);
  EXPECT_EQ(p_d_star(0, 4, 3), 0);
}

TEST(PDStar, StrictReading) {
  const auto t = p_d_star_terms(1, 3, 2, Reading::Strict);
  EXPECT_EQ(t.reading, Reading::Strict);
  EXPECT_EQ(str(t.doubled_alternative), str(oracle_degenerate_b_strict(1, 3, 2)));
  EXPECT_EQ(t.value, 4096);
}

TEST(Bounds, ZeroDistanceRejected) {
  EXPECT_THROW(p_star_original(1, 0), ParameterError);
  EXPECT_THROW(p_star_alternative(1, 0, 2), ParameterError);
  EXPECT_THROW(p_d_star(1, 0, 2), ParameterError);
}

TEST(Bounds, GridAgainstExactOracle) {
  for (unsigned q : {2u, 3u, 5u, 7u}) {
    for (unsigned d = 1; d <= 7; ++d) {
      for (unsigned B = 0; B <= 12; ++B) {
        SCOPED_TRACE("q=" + std::to_string(q) + " d=" + std::to_string(d) + " B=" + std::to_string(B));
        EXPECT_EQ(str(p_star_original(B, d)), str(oracle_original(B, d)));
        EXPECT_EQ(str(p_star_alternative(B, d, q)), str(oracle_alternative(B, d, q)));
        if (d >= 2) {
          const auto t = p_d_star_terms(B, d, q);
          EXPECT_EQ(str(t.doubled_original), str(oracle_original(B, 2 * d - 1)));
          EXPECT_EQ(str(t.doubled_alternative), str(oracle_degenerate_b(B, d, q)));
          EXPECT_EQ(t.value, std::min(t.doubled_original, t.doubled_alternative));
        }
        if (d >= 3) {
          EXPECT_EQ(str(p_d_star_terms(B, d, q, Reading::Strict).doubled_alternative),
                    str(oracle_degenerate_b_strict(B, d, q)));
        }
      }
    }
  }
}

TEST(Bounds, QubitReductionMatchesGeneral) {
  for (unsigned B = 0; B <= 10; ++B) {
    for (unsigned d = 1; d <= 6; ++d) {
      EXPECT_EQ(str(p_star_alternative(B, d, 2)), str(oracle_alternative_q2(B, d)));
    }
  }
}

TEST(Bounds, MonotoneInBAndD) {
  for (std::int64_t q : {2, 3, 5}) {
    for (unsigned d = 2; d <= 7; ++d) {
      for (unsigned B = 0; B <= 10; ++B) {
        EXPECT_LE(p_star_original(B, d), p_star_original(B + 1, d));
        EXPECT_LE(p_star_alternative(B, d, q), p_star_alternative(B + 1, d, q));
        EXPECT_LE(p_d_star(B, d, q), p_d_star(B + 1, d, q));
        if (B >= 1) {
          EXPECT_LE(p_star_original(B, d), p_star_original(B, d + 1));
          EXPECT_LE(p_star_alternative(B, d, q), p_star_alternative(B, d + 1, q));
          EXPECT_LE(p_d_star(B, d, q), p_d_star(B, d + 1, q));
        }
      }
    }
  }
}

TEST(Bounds, LargeDistanceUsesEnoughPrecision) {
  // 60 digits of headroom beyond double; exact match proves no truncation.
  EXPECT_EQ(str(p_star_alternative(97, 15, 13)), str(oracle_alternative(97, 15, 13)));
  EXPECT_EQ(str(p_d_star_terms(31, 9, 11).doubled_alternative), str(oracle_degenerate_b(31, 9, 11)));
}

TEST(Hamming, Examples) {
  const auto five = hamming_sides(5, 1, 3, 2);
  EXPECT_EQ(five.lhs, 32);
  EXPECT_EQ(five.rhs, 32);
  EXPECT_TRUE(hamming_bound_holds(5, 1, 3, 2));
  const auto six = hamming_sides(6, 1, 3, 2);
  EXPECT_EQ(six.lhs, 38);
  EXPECT_EQ(six.rhs, 64);
  EXPECT_TRUE(hamming_bound_holds(6, 1, 3, 2));
  EXPECT_TRUE(hamming_bound_holds(4, 4, 1, 3));
  EXPECT_FALSE(hamming_bound_holds(4, 1, 3, 2));
}

TEST(PDoubleStar, Examples) {
  const auto five = p_double_star(5, 1, 3);
  EXPECT_GE(five.approx, 1.6462);
  EXPECT_LE(five.approx, 1.6463);
  EXPECT_EQ(five.text, "1.64620045762255");
  EXPECT_GE(five.significant_digits, 12);
  // sqrt(1 + 6^(1/4)) = 1.6015881430858831...
  EXPECT_EQ(p_double_star(6, 1, 3).text, "1.60158814308588");
  EXPECT_EQ(p_double_star(3, 0, 1).text.substr(0, 14), "1.414213562373");
  EXPECT_THROW(p_double_star(3, 2, 3), NotApplicableError);
}

TEST(PDoubleStar, RoundsDown) {
  // sqrt(1 + 5^(1/3)) = 1.6462004576225546...; a downward result never exceeds it.
  const auto v = p_double_star(5, 1, 3);
  EXPECT_LE(v.text, std::string("1.64620045762256"));
}

TEST(EvaluateBounds, SixQubitDegenerate) {
  const auto r = evaluate_bounds(1, CodeParameters{6, 1, 2, 3}, true);
  EXPECT_EQ(r.p_star_original, 16);
  EXPECT_EQ(r.p_star_alternative, 100);
  EXPECT_EQ(r.p_star_effective, 16);
  ASSERT_TRUE(r.p_d_star);
  EXPECT_EQ(r.p_d_star->value, 4096);
  EXPECT_EQ(r.first_safe_prime, 4099);
  EXPECT_FALSE(r.hamming_applicable);
  EXPECT_FALSE(r.p_double_star);
}

TEST(EvaluateBounds, FiveQubitNonDegenerate) {
  const auto r = evaluate_bounds(1, CodeParameters{5, 1, 2, 3}, false);
  EXPECT_FALSE(r.p_d_star);
  EXPECT_TRUE(r.hamming_applicable);
  ASSERT_TRUE(r.p_double_star);
  EXPECT_EQ(r.first_safe_prime, 17);
}

TEST(EvaluateBounds, Invariants) {
  for (unsigned B = 0; B <= 4; ++B) {
    for (std::size_t d = 1; d <= 5; ++d) {
      for (bool degenerate : {false, true}) {
        const auto r = evaluate_bounds(B, CodeParameters{7, 1, 3, d}, degenerate);
        EXPECT_EQ(r.p_star_effective, std::min(r.p_star_original, r.p_star_alternative));
        EXPECT_TRUE(is_prime(r.first_safe_prime));
        EXPECT_GT(r.first_safe_prime, r.p_star_effective);
        if (r.p_d_star) {
          EXPECT_GT(r.first_safe_prime, r.p_d_star->value);
        }
        EXPECT_EQ(r.p_double_star.has_value(), r.hamming_applicable);
        EXPECT_EQ(r.p_d_star.has_value(), degenerate);
      }
    }
  }
  EXPECT_THROW(evaluate_bounds(1, CodeParameters{5, 1, 2, std::nullopt}, false), ParameterError);
}

}  // namespace
}  // namespace qldi
