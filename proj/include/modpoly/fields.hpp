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

#ifndef MODPOLY_FIELDS_HPP_
#define MODPOLY_FIELDS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modpoly/random.hpp"

namespace modpoly {

// Finite fields in the tower F_p, F_p[s]/(s^2 - c), base[T]/(f).
//
// Elements are stored as a flat little-endian list of integers in [0, p):
// an element of base[T]/(f) is the concatenation of its T-coefficients,
// each written in the representation of the base. The flat list is also
// the serialization format.

enum class FieldLevel { kPrime, kQuadratic, kExtension };

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
  struct Passkey {};

 public:
  // Characteristics are limited so that a product of two residues fits
  // comfortably in 64 bits.
  static constexpr std::uint64_t kMaxCharacteristic = 1ULL << 31;

  static FieldPtr prime(std::uint64_t p);
  // F_p[s]/(s^2 - c) with c the smallest positive non-residue mod p.
  static FieldPtr quadratic(std::uint64_t p);
  // base[T]/(f) for a caller supplied monic f of degree >= 2 (coefficients
  // listed from the constant term up). Throws DomainError unless f is
  // irreducible over base.
  static FieldPtr extension(const FieldPtr& base, const std::vector<FieldElement>& modulus);

  explicit Field(Passkey) {}
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  FieldLevel level() const { return level_; }
  std::uint64_t characteristic() const { return p_; }
  // Degree over the level directly below (1 at the prime level).
  std::size_t degree() const { return degree_; }
  std::size_t total_degree() const { return total_degree_; }
  // Null at the prime level.
  const FieldPtr& base() const { return base_; }
  // Monic defining polynomial over base(), constant term first.
  std::vector<FieldElement> modulus() const;
  // The c in s^2 = c (quadratic level only).
  std::uint64_t quadratic_nonresidue() const { return nonresidue_c_; }
  // p^total_degree.
  const mpz_class& order() const { return order_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_int(const mpz_class& v) const;
  // Flat little-endian coefficients; shorter lists are zero padded and
  // entries are reduced mod p.
  FieldElement from_flat(std::span<const std::int64_t> flat) const;
  FieldElement from_flat_unchecked(std::vector<std::uint64_t> flat) const;
  // From coefficients over base(), constant term first.
  FieldElement from_coefficients(const std::vector<FieldElement>& coeffs) const;
  // The generator T (or s) of this level over its base.
  FieldElement generator() const;
  // Parses the serialization produced by FieldElement::to_string().
  FieldElement parse(std::string_view text) const;
  FieldElement random(Rng& rng) const;

  // True when `sub` is this field or one of the levels below it.
  bool has_subfield(const Field& sub) const;
  // Image of an element of a subfield under the tower inclusion.
  FieldElement embed(const FieldElement& a) const;
  // Inverse of embed(): the preimage of `a` in `sub`, if there is one.
  std::optional<FieldElement> descend(const FieldElement& a, const FieldPtr& sub) const;

  // Structural equality: same characteristic, tower shape and moduli.
  bool same_as(const Field& other) const;

  std::string describe() const;

 private:
  friend class FieldElement;
  friend FieldPtr make_extension(const FieldPtr& base, std::size_t m, Rng& rng);
  friend std::optional<FieldElement> sqrt(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

  static std::shared_ptr<Field> build_extension_ring(const FieldPtr& base,
                                                     std::vector<std::uint64_t> modulus_flat);
  bool modulus_is_irreducible() const;
  void init_sqrt_data();

  void mul_into(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;
  bool inverse_into(const std::uint64_t* a, std::uint64_t* out) const;

  FieldLevel level_ = FieldLevel::kPrime;
  std::uint64_t p_ = 0;
  std::size_t degree_ = 1;
  std::size_t total_degree_ = 1;
  std::size_t base_width_ = 1;  // flat width of one base coefficient
  FieldPtr base_;
  std::uint64_t nonresidue_c_ = 0;
  // Extension level: flat monic modulus, and T^k mod f for m <= k <= 2m-2.
  std::vector<std::uint64_t> modulus_flat_;
  std::vector<std::uint64_t> reduction_table_;
  bool narrow_accumulator_ = false;
  mpz_class order_;

  // Tonelli-Shanks data: order - 1 = 2^two_adicity_ * odd_part_.
  unsigned two_adicity_ = 0;
  mpz_class odd_part_;
  std::vector<std::uint64_t> sylow_generator_;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<std::uint64_t> flat)
      : field_(std::move(field)), flat_(std::move(flat)) {}

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  std::span<const std::uint64_t> flat() const { return flat_; }
  // Coefficients over field()->base(), constant term first.
  std::vector<FieldElement> coefficients() const;
  // Residue value of a prime-level element.
  std::uint64_t value() const;

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  // Multiplication by a small integer.
  FieldElement scaled(std::int64_t k) const;
  FieldElement square() const { return *this * *this; }
  // Throws DomainError("division by zero") for zero.
  FieldElement inverse() const;
  FieldElement pow(const mpz_class& e) const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  // Lexicographic order of the flat serialization; used wherever a
  // canonical ordering of elements is needed.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  // Comma separated flat coefficients, e.g. "3,0" in F_{p^2}.
  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& b) const;

  FieldPtr field_;
  std::vector<std::uint64_t> flat_;
};

// Degree m extension of `base` with a random monic irreducible modulus.
// m == 1 returns base itself. Throws InternalError if no irreducible
// polynomial turns up within 64*m draws.
FieldPtr make_extension(const FieldPtr& base, std::size_t m, Rng& rng);

// Tonelli-Shanks square root; std::nullopt when `a` is not a square.
std::optional<FieldElement> sqrt(const FieldElement& a);
bool is_square(const FieldElement& a);

// Legendre symbol (d/p) for an odd prime p, by Euler's criterion.
int quadratic_character(const mpz_class& d, std::uint64_t p);

// a^p for a in F_{p^2}.
FieldElement frobenius_p2(const FieldElement& a);

// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

}  // namespace modpoly

#endif  // MODPOLY_FIELDS_HPP_
