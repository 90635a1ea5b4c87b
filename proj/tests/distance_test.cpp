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

#include <random>

#include "qldi/distance.hpp"
#include "qldi/errors.hpp"
#include "qldi/ldi.hpp"
#include "test_support.hpp"

namespace qldi {
namespace {

LdiForm six() { return ldi_transform(testing::load_fixture("six_qubit.code"), LVariant::Full); }
LdiForm five() { return ldi_transform(testing::load_fixture("five_qubit.code"), LVariant::Full); }

void expect_witness_valid(const LdiForm& f, const DistanceReport& r) {
  ASSERT_TRUE(r.distance);
  ASSERT_TRUE(r.witness);
  const auto& w = *r.witness;
  EXPECT_EQ(w.weight, *r.distance);
  EXPECT_EQ(weight(w.word), w.weight);
  EXPECT_FALSE(w.in_group);
  const Vector e = phi_encode(w.word);
  const Syndrome s = syndrome(f.tableau, e, r.prime);
  EXPECT_EQ(s.integer, w.syndrome_int);
  for (Int v : s.modular) {
    EXPECT_EQ(v, 0);
  }
  EXPECT_FALSE(in_rowspace(e, f.tableau.reduced(r.prime), r.prime));
  bool zero = true;
  for (Int v : s.integer) zero &= v == 0;
  EXPECT_EQ(w.classification, zero ? ErrorClass::Unavoidable : ErrorClass::Artifact);
}

TEST(Syndrome, Examples) {
  const auto f = six();
  Vector x1(12, 0);
  x1[0] = 1;
  EXPECT_EQ(syndrome(f.tableau, x1, 2).integer, (Vector{-1, -1, -1, 0, 0}));
  EXPECT_EQ(syndrome(f.tableau, x1, 2).modular, (Vector{1, 1, 1, 0, 0}));
  EXPECT_EQ(syndrome(f.tableau, Vector(12, 0), 5).integer, Vector(5, 0));
  for (const auto& row : f.tableau.rows()) {
    EXPECT_EQ(syndrome(f.tableau, row, 7).integer, Vector(5, 0));
  }
  EXPECT_THROW(syndrome(f.tableau, Vector(3, 0), 2), DimensionError);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Vector{0, 0, 0, 0, 0}, 3), ErrorClass::Unavoidable);
  Tableau t(1, {{1, 3}}, Context::integers());
  EXPECT_EQ(syndrome(t, Vector{0, 1}, 3).integer, (Vector{1}));
  EXPECT_EQ(syndrome(t, Vector{1, 0}, 3).integer, (Vector{-3}));
  EXPECT_EQ(classify(Vector{-3}, 3), ErrorClass::Artifact);
  EXPECT_THROW(classify(Vector{-3}, 5), ContractViolation);
  EXPECT_THROW(classify(Vector{1}, 3), ContractViolation);
}

TEST(SupportDims, SingleRegisterStabilizer) {
  const auto f = six();
  ASSERT_TRUE(f.canonical);
  // Original register 6 carries the weight-one generator; find where it sits now.
  std::size_t reg = 0;
  while (f.canonical->columns.origin[reg] != 5) ++reg;
  const std::size_t T[] = {reg};
  const auto dims = support_logical_dims(f, 2, T);
  EXPECT_GE(dims.kernel_dim, 1u);
  EXPECT_GE(dims.group_dim, 1u);
}

TEST(SupportDims, FullSupportCountsLogicals) {
  for (const auto& code : testing::corpus()) {
    const auto f = ldi_transform(code, LVariant::Full);
    std::vector<std::size_t> all(code.n());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (Int p : {2, 3, 5}) {
      const auto dims = support_logical_dims(f, p, all);
      EXPECT_GE(dims.kernel_dim, dims.group_dim);
      if (p == code.q()) {
        EXPECT_EQ(dims.kernel_dim - dims.group_dim, 2 * code.k());
      }
    }
  }
}

TEST(SupportDims, EmptySupportRejected) {
  EXPECT_THROW(support_logical_dims(six(), 2, std::span<const std::size_t>{}), Error);
}

TEST(DistanceSearch, SixQubitAtTwo) {
  const auto f = six();
  const auto r = distance_search(f, 2, 3);
  EXPECT_EQ(r.distance, 3u);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.min_stabilizer_weight, 1u);
  expect_witness_valid(f, r);
}

TEST(DistanceSearch, FiveQubitAtThree) {
  const auto r = distance_search(five(), 3, 3);
  EXPECT_EQ(r.distance, 3u);
  EXPECT_FALSE(r.degenerate);
  EXPECT_FALSE(r.min_stabilizer_weight);
  expect_witness_valid(five(), r);
}

TEST(DistanceSearch, SixQubitJustAboveCutoff) {
  const auto r = distance_search(six(), 4099, 2);
  EXPECT_FALSE(r.distance);
  EXPECT_EQ(r.max_weight_searched, 2u);
  EXPECT_TRUE(preserves_distance(r, 3));
}

TEST(DistanceSearch, WeightAboveNRejected) {
  EXPECT_THROW(distance_search(five(), 2, 6), Error);
}

TEST(DistanceSearch, MonotoneRerun) {
  for (Int p : {2, 3, 5, 7}) {
    const auto r = distance_search(six(), p, 3);
    ASSERT_TRUE(r.distance);
    const auto lower = distance_search(six(), p, *r.distance - 1);
    EXPECT_FALSE(lower.distance);
  }
}

TEST(DistanceSearch, AnchoredAtSourceQ) {
  for (const auto& code : testing::corpus()) {
    const Int q = code.q();
    const std::size_t w = std::min<std::size_t>(3, code.n());
    const auto on_code = distance_search(code.tableau(), q, w);
    for (auto v : {LVariant::Full, LVariant::PlusOnly, LVariant::MinusOnly}) {
      const auto on_ldi = distance_search(ldi_transform(code, v), q, w);
      EXPECT_EQ(on_ldi.distance, on_code.distance);
      EXPECT_EQ(on_ldi.degenerate, on_code.degenerate);
      EXPECT_EQ(on_ldi.min_stabilizer_weight, on_code.min_stabilizer_weight);
    }
  }
}

TEST(DistanceSearch, UnavoidableWitnessesPersist) {
  const Int primes[] = {2, 3, 5, 7, 11};
  std::size_t unavoidable = 0;
  for (const auto& code : testing::corpus()) {
    const auto f = ldi_transform(code, LVariant::Full);
    const std::size_t w = std::min<std::size_t>(3, code.n());
    for (Int p : primes) {
      const auto r = distance_search(f, p, w);
      if (!r.witness || r.witness->classification != ErrorClass::Unavoidable) continue;
      ++unavoidable;
      const Vector e = phi_encode(r.witness->word);
      for (Int other : primes) {
        for (Int v : syndrome(f.tableau, e, other).modular) {
          EXPECT_EQ(v, 0);
        }
      }
    }
  }
  EXPECT_GT(unavoidable, 0u);
}

TEST(ScanPrimes, Examples) {
  const Int six_primes[] = {3, 5, 7, 11, 13};
  for (const auto& r : scan_primes(six(), six_primes, 3)) {
    ASSERT_TRUE(r.distance);
    EXPECT_GE(*r.distance, 3u);
  }
  EXPECT_TRUE(scan_primes(six(), std::span<const Int>{}, 3).empty());
  const Int five_primes[] = {2, 3, 5};
  for (const auto& r : scan_primes(five(), five_primes, 3)) {
    EXPECT_EQ(r.distance, 3u);
  }
  const Int bad[] = {3, 9};
  EXPECT_THROW(scan_primes(six(), bad, 3), ParameterError);
}

TEST(EnumerationOracle, Examples) {
  EXPECT_EQ(enumeration_oracle(five(), 3, 3).distance, 3u);
  const auto r = enumeration_oracle(six(), 2, 1);
  EXPECT_FALSE(r.distance);
  EXPECT_EQ(r.min_stabilizer_weight, 1u);
  EXPECT_THROW(enumeration_oracle(six(), 4099, 3, 1000), BudgetExceeded);
}

void expect_same(const DistanceReport& a, const DistanceReport& b) {
  EXPECT_EQ(a.distance, b.distance);
  EXPECT_EQ(a.degenerate, b.degenerate);
  EXPECT_EQ(a.min_stabilizer_weight, b.min_stabilizer_weight);
  ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
  if (a.witness) {
    EXPECT_EQ(a.witness->weight, b.witness->weight);
  }
}

TEST(EnumerationOracle, AgreesWithRankSearchOnRandomCodes) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> pick_n(2, 5);
  int checked = 0;
  for (Int q : {2, 3}) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = pick_n(rng);
      std::uniform_int_distribution<std::size_t> pick_k(0, n - 1);
      const auto code = testing::random_code(rng, n, pick_k(rng), q);
      const auto f = ldi_transform(code, LVariant::Full);
      const std::size_t w = std::min<std::size_t>(3, n);
      for (Int p : {2, 3}) {
        SCOPED_TRACE("q=" + std::to_string(q) + " p=" + std::to_string(p) + " case " + std::to_string(i));
        const auto fast = distance_search(f, p, w);
        expect_same(fast, enumeration_oracle(f, p, w));
        if (fast.witness) expect_witness_valid(f, fast);
      }
      ++checked;
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(EnumerationOracle, AgreesOnFixturesAcrossPrimes) {
  for (Int p : {2, 3, 5}) {
    expect_same(distance_search(six(), p, 3), enumeration_oracle(six(), p, 3));
    expect_same(distance_search(five(), p, 3), enumeration_oracle(five(), p, 3));
  }
}

TEST(PreservesDistance, Rules) {
  DistanceReport r;
  r.max_weight_searched = 2;
  EXPECT_TRUE(preserves_distance(r, 3));
  EXPECT_FALSE(preserves_distance(r, 4));
  r.distance = 2;
  EXPECT_FALSE(preserves_distance(r, 3));
  r.distance = 3;
  EXPECT_TRUE(preserves_distance(r, 3));
}

}  // namespace
}  // namespace qldi
