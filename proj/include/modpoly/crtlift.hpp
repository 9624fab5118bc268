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

#ifndef MODPOLY_CRTLIFT_HPP_
#define MODPOLY_CRTLIFT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "modpoly/bivariate.hpp"
#include "modpoly/random.hpp"

namespace modpoly {

// Incremental CRT over grids of phi_l modulo distinct primes.
class CrtAccumulator {
 public:
  explicit CrtAccumulator(unsigned ell);

  // Throws DomainError for a repeated prime or a grid of another l.
  void add(std::uint64_t p, const BivariatePoly& grid);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  const mpz_class& modulus() const { return modulus_; }
  // Coefficients in the symmetric range (-M/2, M/2].
  BivariatePoly reconstruction() const;

 private:
  unsigned ell_;
  std::vector<std::uint64_t> primes_;
  mpz_class modulus_ = 1;
  std::vector<mpz_class> residues_;  // in [0, M)
};

struct CrtResult {
  BivariatePoly poly;
  std::vector<std::uint64_t> primes;
  std::size_t modulus_bits = 0;
  // The reconstruction did not change over the last two added primes.
  bool stabilized = false;
};

// Modulus size at which the automatic prime schedule gives up:
// 2 (6 l ln l + 18 l + 64) / ln 2 bits.
std::size_t crt_cap_bits(unsigned ell);

// phi_l over the integers. With an empty prime list, primes are taken in
// ascending order from 12l + 13 until the reconstruction is unchanged by
// two further primes; InternalError("not stabilized at cap") once the
// modulus passes crt_cap_bits. An explicit list is used as given; each
// prime must satisfy S(p) >= l+1.
CrtResult crt_lift(unsigned ell, const std::vector<std::uint64_t>& primes, Rng& rng);

}  // namespace modpoly

#endif  // MODPOLY_CRTLIFT_HPP_
