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

#include "qldi/stabilizer_code.hpp"

#include <string>

#include "qldi/errors.hpp"
#include "qldi/modular_linalg.hpp"
#include "qldi/primes.hpp"

namespace qldi {

StabilizerCode StabilizerCode::validate(const Tableau& generators, CodeParameters params) {
  const auto& [n, k, q, d] = params;
  if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
    throw ValidationError("local dimension q=" + std::to_string(q) + " is not prime");
  }
  if (k > n) throw ValidationError("k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (generators.num_registers() != n) {
    throw ValidationError("generators act on " + std::to_string(generators.num_registers()) +
                          " registers, header says n=" + std::to_string(n));
  }
  if (generators.num_rows() != n - k) {
    throw ValidationError("expected n-k=" + std::to_string(n - k) + " generators, found " +
                          std::to_string(generators.num_rows()));
  }
  if (d && *d == 0) throw ValidationError("declared distance must be at least 1");

  Tableau t = generators.reduced(q);
  const Context ctx = t.context();
  for (std::size_t i = 0; i < t.num_rows(); ++i) {
    for (std::size_t j = i + 1; j < t.num_rows(); ++j) {
      if (symplectic_product(t.row(i), t.row(j), ctx) != 0) {
        const Int over_z = symplectic_product(t.row(i), t.row(j), Context::integers());
        throw ValidationError("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " do not commute: symplectic product " + std::to_string(over_z) +
                              " is nonzero mod " + std::to_string(q));
      }
    }
  }
  Matrix earlier;
  for (std::size_t i = 0; i < t.num_rows(); ++i) {
    if (in_rowspace(t.row(i), earlier, q)) {
      throw DependentRowError(i, "generator " + std::to_string(i + 1) +
                                     " is a combination of earlier generators mod " + std::to_string(q));
    }
    earlier.push_back(t.row(i));
  }
  return StabilizerCode(std::move(t), params);
}

}  // namespace qldi
