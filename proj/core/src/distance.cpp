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

#include "qldi/distance.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "qldi/errors.hpp"
#include "qldi/modular_linalg.hpp"
#include "qldi/primes.hpp"

namespace qldi {

namespace {

void require_prime(Int p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ParameterError(std::to_string(p) + " is not prime");
  }
}

// Advances `idx` to the next w-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t w = idx.size();
  for (std::size_t i = w; i-- > 0;) {
    if (idx[i] < n - w + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t w) {
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  return idx;
}

// Rows of t reduced into Z_p, kept as a plain matrix for the hot loop.
Matrix residues(const Tableau& t, Int p) {
  Matrix m = t.rows();
  for (auto& r : m) {
    for (auto& v : r) v = mod_reduce(v, p);
  }
  return m;
}

// Syndrome matrix restricted to the support: error coordinates are
// (x_T1, z_T1, x_T2, z_T2, ...); the x coefficient is -z_row, the z coefficient is x_row.
Matrix restricted_syndrome_matrix(const Matrix& rows, std::size_t n, Int p,
                                  std::span<const std::size_t> support) {
  Matrix s(rows.size(), Vector(2 * support.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t a = 0; a < support.size(); ++a) {
      s[i][2 * a] = mod_reduce(-rows[i][n + support[a]], p);
      s[i][2 * a + 1] = rows[i][support[a]];
    }
  }
  return s;
}

// Transpose of the generator matrix restricted to columns outside the support.
Matrix outside_columns(const Matrix& rows, std::size_t n, std::span<const std::size_t> support) {
  std::vector<bool> inside(n, false);
  for (auto s : support) inside[s] = true;
  Matrix out;
  for (std::size_t c = 0; c < n; ++c) {
    if (inside[c]) continue;
    Vector xs(rows.size()), zs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      xs[i] = rows[i][c];
      zs[i] = rows[i][n + c];
    }
    out.push_back(std::move(xs));
    out.push_back(std::move(zs));
  }
  return out;
}

void check_support(std::span<const std::size_t> support, std::size_t n) {
  if (support.empty()) throw ParameterError("support must contain at least one register");
  std::vector<bool> seen(n, false);
  for (auto s : support) {
    if (s >= n) throw DimensionError("register " + std::to_string(s + 1) + " out of range");
    if (seen[s]) throw ParameterError("register " + std::to_string(s + 1) + " repeated in support");
    seen[s] = true;
  }
}

struct Analyzer {
  Matrix rows;
  std::size_t n;
  Int p;
  std::size_t full_rank;

  Analyzer(const Tableau& t, Int prime)
      : rows(residues(t, prime)), n(t.num_registers()), p(prime), full_rank(rank_mod(rows, prime)) {}

  std::size_t group_dim(std::span<const std::size_t> support) const {
    if (rows.empty()) return 0;
    const Matrix outside = outside_columns(rows, n, support);
    return full_rank - rank_mod(outside, p);
  }

  std::size_t kernel_dim(std::span<const std::size_t> support) const {
    if (rows.empty()) return 2 * support.size();
    return 2 * support.size() - rank_mod(restricted_syndrome_matrix(rows, n, p, support), p);
  }

  // Basis of the stabilizers supported inside `support`, as full 2n vectors.
  Matrix group_basis(std::span<const std::size_t> support) const {
    Matrix basis;
    if (rows.empty()) return basis;
    const Matrix outside = outside_columns(rows, n, support);
    for (const auto& c : kernel_mod(outside, rows.size(), p)) {
      Vector g(2 * n, 0);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < 2 * n; ++j) g[j] = add_mod(g[j], mul_mod(c[i], rows[i][j], p), p);
      }
      basis.push_back(std::move(g));
    }
    return basis;
  }

  // First kernel basis vector (lexicographic basis order) outside the group span.
  std::optional<Vector> witness(std::span<const std::size_t> support) const {
    Matrix kernel;
    if (rows.empty()) {
      for (std::size_t c = 0; c < 2 * support.size(); ++c) {
        Vector v(2 * support.size(), 0);
        v[c] = 1;
        kernel.push_back(std::move(v));
      }
    } else {
      kernel = kernel_mod(restricted_syndrome_matrix(rows, n, p, support), 2 * support.size(), p);
    }
    const Matrix group = group_basis(support);
    for (const auto& kv : kernel) {
      Vector e(2 * n, 0);
      for (std::size_t a = 0; a < support.size(); ++a) {
        e[support[a]] = kv[2 * a];
        e[n + support[a]] = kv[2 * a + 1];
      }
      if (!in_rowspace(e, group, p)) return e;
    }
    return std::nullopt;
  }
};

ErrorWitness make_witness(const Tableau& t, const Vector& e, Int p) {
  Syndrome s = syndrome(t, e, p);
  const ErrorClass cls = classify(s.integer, p);
  return ErrorWitness{phi_decode(e, p), weight(std::span<const Int>(e)), std::move(s.integer),
                      std::move(s.modular), cls, false};
}

void finish(DistanceReport& r) {
  r.degenerate = r.min_stabilizer_weight &&
                 (!r.distance || *r.min_stabilizer_weight < *r.distance);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string_view to_string(ErrorClass c) noexcept {
  return c == ErrorClass::Unavoidable ? "unavoidable" : "artifact";
}

Syndrome syndrome(const Tableau& t, std::span<const Int> e, Int p) {
  if (e.size() != 2 * t.num_registers()) {
    throw DimensionError("error vector has length " + std::to_string(e.size()) + ", expected " +
                         std::to_string(2 * t.num_registers()));
  }
  Syndrome s;
  const auto ints = Context::integers();
  for (const auto& row : t.rows()) {
    const Int v = symplectic_product(row, e, ints);
    s.integer.push_back(v);
    s.modular.push_back(mod_reduce(v, p));
  }
  return s;
}

ErrorClass classify(std::span<const Int> syndrome_int, Int p) {
  bool zero = true;
  for (Int v : syndrome_int) {
    if (mod_reduce(v, p) != 0) {
      throw ContractViolation("classify called on a detectable error (syndrome entry " +
                              std::to_string(v) + " is nonzero mod " + std::to_string(p) + ")");
    }
    zero = zero && v == 0;
  }
  return zero ? ErrorClass::Unavoidable : ErrorClass::Artifact;
}

SupportDims support_logical_dims(const Tableau& t, Int p, std::span<const std::size_t> support) {
  require_prime(p);
  check_support(support, t.num_registers());
  const Analyzer a(t, p);
  return {a.kernel_dim(support), a.group_dim(support)};
}

SupportDims support_logical_dims(const LdiForm& ldi, Int p, std::span<const std::size_t> support) {
  return support_logical_dims(ldi.tableau, p, support);
}

DistanceReport distance_search(const Tableau& t, Int p, std::size_t w_max) {
  require_prime(p);
  const std::size_t n = t.num_registers();
  if (w_max > n) {
    throw ParameterError("max weight " + std::to_string(w_max) + " exceeds n=" + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  const Tableau lifted = t.lifted();
  const Analyzer a(lifted, p);

  DistanceReport r;
  r.prime = p;
  r.max_weight_searched = w_max;
  for (std::size_t w = 1; w <= w_max; ++w) {
    if (r.distance && r.min_stabilizer_weight) break;
    auto support = first_combination(w);
    do {
      if (!r.min_stabilizer_weight && a.group_dim(support) > 0) r.min_stabilizer_weight = w;
      if (!r.distance && a.kernel_dim(support) > a.group_dim(support)) {
        auto e = a.witness(support);
        // A witness with smaller support would have been caught at a lower weight.
        if (e && weight(std::span<const Int>(*e)) == w) {
          r.distance = w;
          r.witness = make_witness(lifted, *e, p);
        }
      }
      if (r.distance && r.min_stabilizer_weight) break;
    } while (next_combination(support, n));
  }
  finish(r);
  r.millis = elapsed_ms(start);
  return r;
}

DistanceReport distance_search(const LdiForm& ldi, Int p, std::size_t w_max) {
  return distance_search(ldi.tableau, p, w_max);
}

std::vector<DistanceReport> scan_primes(const LdiForm& ldi, std::span<const Int> primes,
                                        std::size_t w_max) {
  for (Int p : primes) require_prime(p);
  std::vector<DistanceReport> out;
  out.reserve(primes.size());
  for (Int p : primes) out.push_back(distance_search(ldi, p, w_max));
  return out;
}

bool preserves_distance(const DistanceReport& report, std::size_t declared_d) {
  if (report.distance) return *report.distance >= declared_d;
  return report.max_weight_searched + 1 >= declared_d;
}

DistanceReport enumeration_oracle(const Tableau& t, Int p, std::size_t w_max, std::uint64_t budget) {
  require_prime(p);
  const std::size_t n = t.num_registers();
  if (w_max > n) {
    throw ParameterError("max weight " + std::to_string(w_max) + " exceeds n=" + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t per_site = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p) - 1;
  {
    long double total = 0;
    long double binom = 1;
    for (std::size_t w = 1; w <= w_max; ++w) {
      binom = binom * static_cast<long double>(n - w + 1) / static_cast<long double>(w);
      total += binom * std::pow(static_cast<long double>(per_site), static_cast<long double>(w));
    }
    if (total > static_cast<long double>(budget)) {
      throw BudgetExceeded("enumeration of " + std::to_string(static_cast<double>(total)) +
                           " candidates exceeds budget " + std::to_string(budget));
    }
  }

  const Tableau lifted = t.lifted();
  const Matrix rows = residues(lifted, p);
  const Context mod_p = Context::modular(p);

  DistanceReport r;
  r.prime = p;
  r.max_weight_searched = w_max;
  for (std::size_t w = 1; w <= w_max && !(r.distance && r.min_stabilizer_weight); ++w) {
    auto support = first_combination(w);
    do {
      // Each site cycles through the p^2-1 non-identity (x, z) pairs.
      std::vector<std::uint64_t> choice(w, 1);
      while (true) {
        Vector e(2 * n, 0);
        for (std::size_t a = 0; a < w; ++a) {
          e[support[a]] = static_cast<Int>(choice[a] / static_cast<std::uint64_t>(p));
          e[n + support[a]] = static_cast<Int>(choice[a] % static_cast<std::uint64_t>(p));
        }
        bool commutes = true;
        for (const auto& row : rows) {
          if (symplectic_product(row, e, mod_p) != 0) {
            commutes = false;
            break;
          }
        }
        if (commutes) {
          const bool in_group = in_rowspace(e, rows, p).has_value();
          if (in_group && !r.min_stabilizer_weight) r.min_stabilizer_weight = w;
          if (!in_group && !r.distance) {
            r.distance = w;
            r.witness = make_witness(lifted, e, p);
          }
        }
        std::size_t a = w;
        while (a > 0 && choice[a - 1] == per_site) choice[--a] = 1;
        if (a == 0) break;
        ++choice[a - 1];
      }
    } while (next_combination(support, n));
  }
  finish(r);
  r.millis = elapsed_ms(start);
  return r;
}

DistanceReport enumeration_oracle(const LdiForm& ldi, Int p, std::size_t w_max, std::uint64_t budget) {
  return enumeration_oracle(ldi.tableau, p, w_max, budget);
}

}  // namespace qldi
