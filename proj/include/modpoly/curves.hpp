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

#ifndef MODPOLY_CURVES_HPP_
#define MODPOLY_CURVES_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "modpoly/fields.hpp"
#include "modpoly/random.hpp"

namespace modpoly {

// Affine point or the point at infinity.
class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  CurvePoint(FieldElement x, FieldElement y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

  bool is_infinity() const { return infinity_; }
  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b);
  std::string to_string() const;

 private:
  CurvePoint() = default;

  bool infinity_ = true;
  FieldElement x_;
  FieldElement y_;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a field of
// characteristic > 3.
class Curve {
 public:
  // Throws DomainError for a singular curve or coefficients from
  // different fields.
  Curve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6);
  static Curve short_weierstrass(const FieldElement& a4, const FieldElement& a6);

  const FieldPtr& field() const { return a1_.field(); }
  const FieldElement& a1() const { return a1_; }
  const FieldElement& a2() const { return a2_; }
  const FieldElement& a3() const { return a3_; }
  const FieldElement& a4() const { return a4_; }
  const FieldElement& a6() const { return a6_; }
  bool is_short() const { return a1_.is_zero() && a2_.is_zero() && a3_.is_zero(); }

  FieldElement b2() const;
  FieldElement b4() const;
  FieldElement b6() const;
  FieldElement b8() const;
  FieldElement c4() const;
  FieldElement c6() const;
  FieldElement discriminant() const;
  FieldElement j_invariant() const;

  // The same equation over a field containing field().
  Curve base_change(const FieldPtr& ext) const;

  bool contains(const CurvePoint& pt) const;
  CurvePoint negate(const CurvePoint& pt) const;
  // Group law. Both throw DomainError("point not on curve") for bad input.
  CurvePoint add(const CurvePoint& a, const CurvePoint& b) const;
  CurvePoint scalar_mul(const mpz_class& k, const CurvePoint& pt) const;

  // Same as above without the membership checks; for inner loops whose
  // inputs are known to be on the curve.
  CurvePoint add_unchecked(const CurvePoint& a, const CurvePoint& b) const;
  CurvePoint scalar_mul_unchecked(const mpz_class& k, const CurvePoint& pt) const;

  // "a1 a2 a3 a4 a6", each coefficient in FieldElement serialization.
  std::string to_string() const;

  friend bool operator==(const Curve& a, const Curve& b);

 private:
  void require_on_curve(const CurvePoint& pt) const;

  FieldElement a1_, a2_, a3_, a4_, a6_;
};

// y^2 = x^3 + 1 for j = 0, y^2 = x^3 + x for j = 1728, otherwise
// y^2 = x^3 + 3j(1728 - j) x + 2j(1728 - j)^2.
Curve curve_from_j(const FieldElement& j);

// A point with uniformly random x among the x-coordinates that lift, and a
// uniformly chosen y over that x.
CurvePoint random_point(const Curve& e, Rng& rng);

// Frobenius trace of a curve over F_q: #E(F_q) = q + 1 - trace.
struct TraceData {
  std::int64_t q = 0;
  std::int64_t trace = 0;
};

// Trace of a supersingular curve over F_{p^2}: the unique a in
// {0, +-p, +-2p} with (q + 1 - a) P = O for every sampled P. At least
// kTraceConfirmations random points are used.
inline constexpr int kTraceConfirmations = 8;
TraceData supersingular_trace(const Curve& e, Rng& rng);

// #E(F_{q^n}) = q^n + 1 - (pi^n + conj(pi)^n) from the trace over F_q.
mpz_class point_count_ext(const mpz_class& q, std::int64_t trace, unsigned n);

// Brute-force #E over a prime or quadratic field; for tests and the
// ordinary-curve fallback. Requires a field of at most 10^6 elements.
mpz_class brute_force_point_count(const Curve& e);

}  // namespace modpoly

#endif  // MODPOLY_CURVES_HPP_
