/*
 * Copyright 2026 The modpoly Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "modpoly/crtlift.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modpoly/errors.hpp"
#include "modpoly/fields.hpp"
#include "modpoly/globalphi.hpp"

namespace modpoly {

CrtAccumulator::CrtAccumulator(unsigned ell)
    : ell_(ell), residues_(static_cast<std::size_t>(ell + 2) * (ell + 2), 0) {}

void CrtAccumulator::add(std::uint64_t p, const BivariatePoly& grid) {
  if (grid.ell() != ell_ || grid.modulus() != p) throw DomainError("grid does not match the accumulator");
  if (std::find(primes_.begin(), primes_.end(), p) != primes_.end()) {
    throw DomainError("prime " + std::to_string(p) + " already used");
  }
  const unsigned long up = static_cast<unsigned long>(p);
  mpz_class m_mod_p = modulus_ % up;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), m_mod_p.get_mpz_t(), mpz_class(up).get_mpz_t());
  const std::size_t n = grid.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      mpz_class& r = residues_[k * n + m];
      mpz_class t = (grid.at(k, m) - r) % up;
      t = (t * inv) % up;
      if (t < 0) t += up;
      r += modulus_ * t;
    }
  }
  modulus_ *= up;
  primes_.push_back(p);
}

BivariatePoly CrtAccumulator::reconstruction() const {
  BivariatePoly out(ell_, 0);
  const mpz_class half = modulus_ / 2;
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      const mpz_class& r = residues_[k * n + m];
      out.set(k, m, r > half ? mpz_class(r - modulus_) : r);
    }
  }
  return out;
}

std::size_t crt_cap_bits(unsigned ell) {
  const double l = ell;
  return static_cast<std::size_t>(std::ceil(2 * (6 * l * std::log(l) + 18 * l + 64) / std::log(2.0)));
}

CrtResult crt_lift(unsigned ell, const std::vector<std::uint64_t>& primes, Rng& rng) {
  CrtAccumulator acc(ell);
  CrtResult result{BivariatePoly(ell, 0), {}, 0, false};
  if (!primes.empty()) {
    std::vector<BivariatePoly> history;
    for (std::uint64_t p : primes) {
      check_mod_p_inputs(p, ell);
      acc.add(p, modular_poly_mod_p(p, ell, rng));
      history.push_back(acc.reconstruction());
    }
    const std::size_t h = history.size();
    result.stabilized = h >= 3 && history[h - 1] == history[h - 2] && history[h - 1] == history[h - 3];
    result.poly = history.back();
  } else {
    if (ell < 3 || !is_prime(ell)) throw PreconditionError("ℓ must be an odd prime");
    const std::size_t cap = crt_cap_bits(ell);
    BivariatePoly last(ell, 0);
    int unchanged = -1;
    for (std::uint64_t p = 12 * ell + 13;; ++p) {
      if (!is_prime(p)) continue;
      acc.add(p, modular_poly_mod_p(p, ell, rng));
      BivariatePoly now = acc.reconstruction();
      unchanged = (unchanged >= 0 && now == last) ? unchanged + 1 : 0;
      last = std::move(now);
      if (unchanged >= 2) {
        result.stabilized = true;
        break;
      }
      if (mpz_sizeinbase(acc.modulus().get_mpz_t(), 2) >= cap) {
        throw InternalError("not stabilized at cap: " + std::to_string(acc.primes().size()) + " primes, " +
                            std::to_string(mpz_sizeinbase(acc.modulus().get_mpz_t(), 2)) + " bits, cap " +
                            std::to_string(cap));
      }
    }
    result.poly = std::move(last);
  }
  result.primes = acc.primes();
  result.modulus_bits = mpz_sizeinbase(acc.modulus().get_mpz_t(), 2);
  return result;
}

}  // namespace modpoly
