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

#ifndef MODPOLY_CLASSICAL_HPP_
#define MODPOLY_CLASSICAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "modpoly/bivariate.hpp"

namespace modpoly {

// Truncated Laurent series sum_{i < N} c_i q^(v + i) with integer
// coefficients; terms at or beyond q^(v + N) are unknown.
class QExpansion {
 public:
  QExpansion(int valuation, std::vector<mpz_class> coeffs);

  int valuation() const { return v_; }
  std::size_t length() const { return c_.size(); }
  // First exponent that is not known.
  int end() const { return v_ + static_cast<int>(c_.size()); }
  // Coefficient of q^e: zero below the valuation; DomainError at or past
  // end().
  const mpz_class& coeff(int e) const;
  const std::vector<mpz_class>& coefficients() const { return c_; }

  QExpansion operator+(const QExpansion& b) const;
  QExpansion operator-(const QExpansion& b) const;
  QExpansion operator*(const QExpansion& b) const;
  QExpansion scaled(const mpz_class& k) const;
  QExpansion pow(unsigned k) const;
  // 1 / f for f with leading coefficient +-1.
  QExpansion inverse() const;
  // f(q^m).
  QExpansion substitute(unsigned m) const;
  QExpansion truncated(std::size_t n) const;

 private:
  int v_;
  std::vector<mpz_class> c_;
};

// Eisenstein series 1 + 240 sum sigma_3(n) q^n and 1 - 504 sum sigma_5(n) q^n.
QExpansion eisenstein_e4(std::size_t n);
QExpansion eisenstein_e6(std::size_t n);
// Delta = q prod (1 - q^n)^24, with n known coefficients.
QExpansion delta_qexp(std::size_t n);

// j = E4^3 / Delta = q^-1 + 744 + 196884 q + ..., n coefficients.
QExpansion j_qexp(std::size_t n);
// j^k with n coefficients, starting at q^-k.
QExpansion jpow_coeffs(unsigned k, std::size_t n);

struct GrowthCell {
  unsigned n;
  unsigned k;
  double logcoeff;  // ln of the q^n coefficient of j^k
  double upper;     // 4 pi sqrt((n + k) k)
  double ratio;     // logcoeff / sqrt(n k)
};

struct GrowthReport {
  std::vector<GrowthCell> cells;
  // k = 1: c(n) sqrt(2) n^(3/4) / exp(4 pi sqrt(n)), indexed by n - 1.
  std::vector<double> petersson;
  // Cells skipped because the coefficient was not positive.
  std::size_t excluded = 0;
};

// All cells 1 <= n <= nmax, 1 <= k <= kmax. Throws InternalError if some
// logcoeff exceeds its upper bound.
GrowthReport growth_report(unsigned nmax, unsigned kmax);

// The integer modular polynomial phi_l for a prime l <= 13, by solving
// phi(j(q), j(q^l)) = 0 in exact rationals over the symmetric unknowns,
// with (l+1)^2 + 2l + 8 vanishing coefficients. A rank-deficient system is
// retried with more coefficients (3 times) before
// InternalError("insufficient truncation").
BivariatePoly classical_phi(unsigned ell);

}  // namespace modpoly

#endif  // MODPOLY_CLASSICAL_HPP_
