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

#ifndef MODPOLY_SSINIT_HPP_
#define MODPOLY_SSINIT_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "modpoly/fields.hpp"
#include "modpoly/random.hpp"

namespace modpoly {

struct Discriminant {
  std::int64_t D = 0;
  // D = -4d, or 0 when D is not of that shape.
  std::int64_t d = 0;
};

struct ClassPolynomial {
  std::int64_t D = 0;
  // Monic integer polynomial, constant term first.
  std::vector<mpz_class> coefficients;
  // Working precision of the accepted evaluation, and the largest distance
  // of a computed coefficient from its rounded integer value.
  unsigned precision_bits = 0;
  double residual = 0;
};

// S(p) = floor(p/12) + (0, 1, 1, 2) for p = (1, 5, 7, 11) mod 12.
std::uint64_t supersingular_count(std::uint64_t p);

// D = -4 for p = 3 mod 4, else D = -4d for the least d with (d/p) = -1.
Discriminant find_discriminant(std::uint64_t p);

// Reduced primitive forms (a, b, c) of discriminant D: |b| <= a <= c,
// b >= 0 when |b| = a or a = c.
std::vector<std::array<std::int64_t, 3>> reduced_forms(std::int64_t D);

// H_D over the integers by evaluating j at the CM points of the reduced
// forms. Precision starts at 3.5 pi sqrt|D| h / ln 2 + 64 bits and doubles
// (up to 4 times) while a coefficient lies more than 0.25 from an integer;
// then InternalError("insufficient precision"). Requires -10^6 <= D < 0
// and D = 0, 1 mod 4.
ClassPolynomial hilbert_class_poly(std::int64_t D);

// A supersingular j-invariant in Field::quadratic(p): 1728 for
// p = 3 mod 4, 0 for p = 2 mod 3, otherwise the least root of H_D mod p.
FieldElement supersingular_j(std::uint64_t p, Rng& rng);

}  // namespace modpoly

#endif  // MODPOLY_SSINIT_HPP_
