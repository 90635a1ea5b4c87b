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

#include "qldi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <mpfr.h>

#include "qldi/errors.hpp"

namespace qldi {

namespace {

// Owns one mpfr_t. Every arithmetic helper below takes an explicit rounding mode.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

 private:
  mpfr_t v_;
};

// Enough bits to hold an integer of roughly 2^log2_estimate exactly, plus slack for the ceiling.
mpfr_prec_t precision_for(double log2_estimate) {
  const double bits = std::max(0.0, log2_estimate);
  return static_cast<mpfr_prec_t>(std::max(256.0, std::ceil(bits) + 128.0));
}

double log2_of(const BigInt& x) {
  if (x <= 0) return 0.0;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

BigInt ceil_to_int(const Real& r) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), r.get(), MPFR_RNDU);
  return out;
}

BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void require_d(unsigned d) {
  if (d == 0) throw ParameterError("distance must be at least 1");
}

void require_q(std::int64_t q) {
  if (q < 2) throw ParameterError("local dimension must be at least 2");
}

}  // namespace

std::string_view to_string(Reading r) noexcept {
  return r == Reading::Strict ? "strict" : "decided";
}

BigInt p_star_original(const BigInt& B, unsigned d) {
  require_d(d);
  const unsigned long e = d - 1;
  return pow_int(B, 2 * e) * pow_int(BigInt(2 * e), e);
}

BigInt p_star_alternative(const BigInt& B, unsigned d, std::int64_t q) {
  require_d(d);
  require_q(q);
  if (d == 1) return 1;
  const unsigned long e = d - 1;
  const double le = std::log2(double(e));
  const double lq = std::log2(double(q - 1));
  const double log_hadamard = d > 2 ? 0.5 * (d - 2) * std::log2(double(d - 2)) : 0.0;
  const double log_inner = 1.0 + 2.0 * le + e * lq + log_hadamard;
  const double est = e * (log2_of(B) + lq + le + log_inner);
  const mpfr_prec_t prec = precision_for(est);

  // hadamard = (d-2)^((d-2)/2), with 0^0 = 1
  Real hadamard(prec);
  if (d == 2) {
    mpfr_set_ui(hadamard.get(), 1, MPFR_RNDU);
  } else {
    Real half(prec);
    mpfr_set_ui(half.get(), d - 2, MPFR_RNDU);
    mpfr_div_ui(half.get(), half.get(), 2, MPFR_RNDU);  // exact
    mpfr_ui_pow(hadamard.get(), d - 2, half.get(), MPFR_RNDU);
  }

  Real inner(prec);
  mpfr_set_z(inner.get(), pow_int(BigInt(q - 1), e).get_mpz_t(), MPFR_RNDU);
  mpfr_mul_ui(inner.get(), inner.get(), e * e, MPFR_RNDU);
  mpfr_mul(inner.get(), inner.get(), hadamard.get(), MPFR_RNDU);
  mpfr_add_ui(inner.get(), inner.get(), 1, MPFR_RNDU);

  Real base(prec);
  mpfr_set_z(base.get(), B.get_mpz_t(), MPFR_RNDU);
  mpfr_mul_ui(base.get(), base.get(), static_cast<unsigned long>(q - 1), MPFR_RNDU);
  mpfr_mul_ui(base.get(), base.get(), e, MPFR_RNDU);
  mpfr_mul(base.get(), base.get(), inner.get(), MPFR_RNDU);
  mpfr_pow_ui(base.get(), base.get(), e, MPFR_RNDU);
  return ceil_to_int(base);
}

DegenerateCutoff p_d_star_terms(const BigInt& B, unsigned d, std::int64_t q, Reading reading) {
  require_d(d);
  require_q(q);
  DegenerateCutoff out;
  out.reading = reading;
  if (d == 1) {
    out.doubled_original = out.doubled_alternative = out.value = 1;
    return out;
  }
  const unsigned long e = d - 1;
  out.doubled_original = pow_int(B, 4 * e) * pow_int(BigInt(4 * e), 2 * e);

  const unsigned long size = 2 * e;  // 2(d-1)
  const double lq = std::log2(double(q - 1));
  const double lsize = std::log2(double(size));
  const double log_ctilde = std::abs(double(d) - 1.5) * (2.0 * lq + std::log2(double(2 * d - 3)));
  const double log_inner = 1.0 + lq + log_ctilde + 2.0 * lsize;
  const double est = size * (lq + lsize + log2_of(B) + log_inner);
  const mpfr_prec_t prec = precision_for(est);

  // ctilde = ((q-1)^2 (2d-3))^expo
  Real expo(prec);
  if (reading == Reading::Decided) {
    mpfr_set_ui(expo.get(), 2 * d - 3, MPFR_RNDU);
  } else {
    mpfr_set_si(expo.get(), static_cast<long>(d) - 3, MPFR_RNDU);
  }
  mpfr_div_ui(expo.get(), expo.get(), 2, MPFR_RNDU);  // exact: d - 3/2 or (d-3)/2
  Real ctilde(prec);
  const BigInt ctilde_base = BigInt(q - 1) * BigInt(q - 1) * (2 * d - 3);
  mpfr_set_z(ctilde.get(), ctilde_base.get_mpz_t(), MPFR_RNDU);
  mpfr_pow(ctilde.get(), ctilde.get(), expo.get(), MPFR_RNDU);

  // inner = 1 + (q-1) ctilde (2(d-1))^2
  Real inner(prec);
  mpfr_mul_ui(inner.get(), ctilde.get(), static_cast<unsigned long>(q - 1), MPFR_RNDU);
  mpfr_mul_ui(inner.get(), inner.get(), size * size, MPFR_RNDU);
  mpfr_add_ui(inner.get(), inner.get(), 1, MPFR_RNDU);

  Real term(prec);
  mpfr_set_z(term.get(), B.get_mpz_t(), MPFR_RNDU);
  mpfr_mul(term.get(), term.get(), inner.get(), MPFR_RNDU);
  if (reading == Reading::Decided) {
    mpfr_mul_ui(term.get(), term.get(), static_cast<unsigned long>(q - 1), MPFR_RNDU);
    mpfr_mul_ui(term.get(), term.get(), size, MPFR_RNDU);
    mpfr_pow_ui(term.get(), term.get(), size, MPFR_RNDU);
  } else {
    mpfr_pow_ui(term.get(), term.get(), size, MPFR_RNDU);
    mpfr_mul_ui(term.get(), term.get(), static_cast<unsigned long>(q - 1), MPFR_RNDU);
    mpfr_mul_ui(term.get(), term.get(), size, MPFR_RNDU);
  }
  out.doubled_alternative = ceil_to_int(term);
  out.value = std::min(out.doubled_original, out.doubled_alternative);
  return out;
}

BigInt p_d_star(const BigInt& B, unsigned d, std::int64_t q, Reading reading) {
  return p_d_star_terms(B, d, q, reading).value;
}

LowerDecimal p_double_star(std::size_t n, std::size_t k, std::size_t d) {
  if (d == 0) throw ParameterError("distance must be at least 1");
  if (k > n) throw ParameterError("k exceeds n");
  const std::size_t t = (d - 1) / 2;
  if (n - k <= t) {
    throw NotApplicableError("lower cutoff undefined: n-k=" + std::to_string(n - k) +
                             " does not exceed t=" + std::to_string(t));
  }
  constexpr int kDigits = 15;
  constexpr mpfr_prec_t kPrec = 256;
  Real expo(kPrec);
  mpfr_set_ui(expo.get(), 1, MPFR_RNDD);
  mpfr_div_ui(expo.get(), expo.get(), n - k - t, MPFR_RNDD);
  Real v(kPrec);
  mpfr_set_z(v.get(), binomial(n, t).get_mpz_t(), MPFR_RNDD);
  mpfr_pow(v.get(), v.get(), expo.get(), MPFR_RNDD);
  mpfr_add_ui(v.get(), v.get(), 1, MPFR_RNDD);
  mpfr_sqrt(v.get(), v.get(), MPFR_RNDD);

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, kDigits, v.get(), MPFR_RNDD);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string text;
  if (exp10 <= 0) {
    text = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + digits;
  } else if (static_cast<std::size_t>(exp10) >= digits.size()) {
    text = digits + std::string(static_cast<std::size_t>(exp10) - digits.size(), '0');
  } else {
    text = digits.substr(0, exp10) + "." + digits.substr(exp10);
  }
  return LowerDecimal{text, kDigits, mpfr_get_d(v.get(), MPFR_RNDD)};
}

HammingSides hamming_sides(std::size_t n, std::size_t k, std::size_t d, std::int64_t q) {
  if (d == 0) throw ParameterError("distance must be at least 1");
  require_q(q);
  const std::size_t t = (d - 1) / 2;
  const BigInt qq = q;
  const BigInt spread = qq * qq - 1;
  BigInt sum = 0;
  for (std::size_t j = 0; j <= t && j <= n; ++j) sum += binomial(n, j) * pow_int(spread, j);
  return {pow_int(qq, k) * sum, pow_int(qq, n)};
}

bool hamming_bound_holds(std::size_t n, std::size_t k, std::size_t d, std::int64_t q) {
  const auto s = hamming_sides(n, k, d, q);
  return s.lhs <= s.rhs;
}

BoundsReport evaluate_bounds(const BigInt& B, const CodeParameters& params, bool degenerate,
                             Reading reading) {
  if (!params.d) throw ParameterError("bounds need a declared distance d");
  const auto d = static_cast<unsigned>(*params.d);
  BoundsReport r;
  r.B = B;
  r.q = params.q;
  r.n = params.n;
  r.k = params.k;
  r.d = d;
  r.reading = reading;
  r.degenerate = degenerate;
  r.p_star_original = p_star_original(B, d);
  r.p_star_alternative = p_star_alternative(B, d, params.q);
  r.p_star_effective = std::min(r.p_star_original, r.p_star_alternative);

  BigInt threshold = r.p_star_effective;
  if (degenerate) {
    r.p_d_star = p_d_star_terms(B, d, params.q, reading);
    threshold = std::max(threshold, r.p_d_star->value);
  }

  r.hamming_applicable = !degenerate && hamming_bound_holds(params.n, params.k, d, params.q);
  if (!r.hamming_applicable) {
    r.p_double_star_note = degenerate ? "degenerate code: no lower cutoff holds in general"
                                      : "parameters violate the quantum Hamming bound";
  } else {
    try {
      r.p_double_star = p_double_star(params.n, params.k, d);
    } catch (const NotApplicableError& e) {
      r.p_double_star_note = e.what();
    }
  }
  r.first_safe_prime = next_prime_above(threshold);
  return r;
}

}  // namespace qldi
