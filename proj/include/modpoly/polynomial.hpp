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

#ifndef MODPOLY_POLYNOMIAL_HPP_
#define MODPOLY_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <span>
#include <utility>
#include <vector>

#include "modpoly/fields.hpp"
#include "modpoly/random.hpp"

namespace modpoly {

// Dense univariate polynomial over a FieldElement field, constant term
// first. The zero polynomial has degree -1 and no stored coefficients.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
  Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);

  // prod (x - r) over the given roots, with multiplicity.
  static Polynomial from_roots(const FieldPtr& field, std::span<const FieldElement> roots);
  // x^k
  static Polynomial monomial(const FieldPtr& field, std::size_t k);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  FieldElement coefficient(std::size_t i) const;
  FieldElement leading() const;

  FieldElement evaluate(const FieldElement& x) const;
  Polynomial monic() const;

  Polynomial operator+(const Polynomial& b) const;
  Polynomial operator-(const Polynomial& b) const;
  Polynomial operator*(const Polynomial& b) const;
  Polynomial scaled(const FieldElement& c) const;
  // (quotient, remainder); throws DomainError for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& b) const;
  Polynomial operator%(const Polynomial& b) const { return divmod(b).second; }

  // this^e mod m.
  Polynomial powmod(const mpz_class& e, const Polynomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void trim();

  FieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

// The distinct roots of f that lie in f.field(), sorted canonically.
// Cantor-Zassenhaus equal-degree splitting of gcd(f, x^Q - x).
std::vector<FieldElement> roots_in_field(const Polynomial& f, Rng& rng);

}  // namespace modpoly

#endif  // MODPOLY_POLYNOMIAL_HPP_
