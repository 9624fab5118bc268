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

#include "modpoly/ssinit.hpp"

#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <numeric>

#include "modpoly/errors.hpp"
#include "modpoly/polynomial.hpp"

namespace modpoly {
namespace {

using boost::multiprecision::mpfr_float;

constexpr double kResidualGate = 0.25;
constexpr int kMaxDoublings = 4;

struct Complex {
  mpfr_float re;
  mpfr_float im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  const mpfr_float n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(mpfr_float::default_precision()) {
    mpfr_float::default_precision(static_cast<unsigned>(std::ceil(bits * std::log10(2.0))) + 2);
  }
  ~PrecisionScope() { mpfr_float::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

std::vector<std::uint64_t> sigma3_table(std::size_t n) {
  std::vector<std::uint64_t> s(n + 1, 0);
  for (std::uint64_t d = 1; d <= n; ++d)
    for (std::uint64_t m = d; m <= n; m += d) s[m] += d * d * d;
  return s;
}

// j(tau) = E4^3 / Delta at tau = (-b + sqrt(D)) / 2a.
Complex j_at_form(std::int64_t a, std::int64_t b, std::int64_t D, unsigned bits) {
  mpfr_float pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  const mpfr_float root = boost::multiprecision::sqrt(mpfr_float(-D));
  const mpfr_float modulus = boost::multiprecision::exp(-pi * root / a);
  const mpfr_float angle = -pi * b / a;
  const Complex q{modulus * boost::multiprecision::cos(angle), modulus * boost::multiprecision::sin(angle)};

  // |q|^N < 2^-bits.
  const double log_q = M_PI * std::sqrt(static_cast<double>(-D)) / static_cast<double>(a);
  const std::size_t n_terms = static_cast<std::size_t>(std::ceil(bits * std::log(2.0) / log_q)) + 2;

  std::vector<Complex> qpow(n_terms + 1);
  qpow[0] = {mpfr_float(1), mpfr_float(0)};
  for (std::size_t i = 1; i <= n_terms; ++i) qpow[i] = qpow[i - 1] * q;

  // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
  Complex eta = qpow[0];
  for (std::size_t k = 1;; ++k) {
    const std::size_t e1 = k * (3 * k - 1) / 2;
    if (e1 > n_terms) break;
    const std::size_t e2 = k * (3 * k + 1) / 2;
    Complex term = qpow[e1];
    if (e2 <= n_terms) term = term + qpow[e2];
    eta = (k % 2 == 1) ? eta - term : eta + term;
  }
  const Complex e2 = eta * eta;
  const Complex e4 = e2 * e2;
  const Complex e8 = e4 * e4;
  const Complex delta = q * e8 * e8 * e8;

  const auto sigma = sigma3_table(n_terms);
  Complex eis = qpow[0];
  for (std::size_t i = 1; i <= n_terms; ++i) {
    const mpfr_float c = mpfr_float(240) * sigma[i];
    eis = eis + Complex{qpow[i].re * c, qpow[i].im * c};
  }
  return eis * eis * eis / delta;
}

mpz_class round_to_mpz(const mpfr_float& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
  return z;
}

}  // namespace

std::uint64_t supersingular_count(std::uint64_t p) {
  if (p <= 3) throw PreconditionError("supersingular_count needs p > 3");
  static constexpr std::uint64_t kEpsilon[12] = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2};
  return p / 12 + kEpsilon[p % 12];
}

Discriminant find_discriminant(std::uint64_t p) {
  if (p <= 3) throw PreconditionError("find_discriminant needs p > 3");
  if (p % 4 == 3) return Discriminant{-4, 1};
  for (std::int64_t d = 2;; ++d) {
    if (quadratic_character(mpz_class(static_cast<long>(d)), p) == -1) return Discriminant{-4 * d, d};
  }
}

std::vector<std::array<std::int64_t, 3>> reduced_forms(std::int64_t D) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

ClassPolynomial hilbert_class_poly(std::int64_t D) {
  if (D >= 0 || D < -1000000) throw PreconditionError("discriminant out of range");
  if (((D % 4) + 4) % 4 > 1) throw PreconditionError("discriminant must be 0 or 1 mod 4");
  const auto forms = reduced_forms(D);
  const double h = static_cast<double>(forms.size());
  unsigned bits = static_cast<unsigned>(3.5 * M_PI * std::sqrt(static_cast<double>(-D)) * h / std::log(2.0)) + 64;
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, bits *= 2) {
    PrecisionScope scope(bits);
    std::vector<Complex> poly{{mpfr_float(1), mpfr_float(0)}};
    for (const auto& f : forms) {
      const Complex j = j_at_form(f[0], f[1], D, bits);
      std::vector<Complex> next(poly.size() + 1, Complex{mpfr_float(0), mpfr_float(0)});
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = next[i + 1] + poly[i];
        next[i] = next[i] - poly[i] * j;
      }
      poly = std::move(next);
    }
    ClassPolynomial out;
    out.D = D;
    out.precision_bits = bits;
    mpfr_float worst = 0;
    for (const auto& c : poly) {
      const mpz_class r = round_to_mpz(c.re);
      const mpfr_float err = boost::multiprecision::max(boost::multiprecision::abs(c.re - mpfr_float(r.get_mpz_t())),
                                                        boost::multiprecision::abs(c.im));
      if (err > worst) worst = err;
      out.coefficients.push_back(r);
    }
    out.residual = worst.convert_to<double>();
    if (out.residual <= kResidualGate) return out;
  }
  throw InternalError("insufficient precision");
}

FieldElement supersingular_j(std::uint64_t p, Rng& rng) {
  if (p <= 3) throw PreconditionError("supersingular_j needs p > 3");
  const FieldPtr f = Field::quadratic(p);
  if (p % 4 == 3) return f->from_int(1728);
  if (p % 3 == 2) return f->zero();
  const ClassPolynomial h = hilbert_class_poly(find_discriminant(p).D);
  std::vector<FieldElement> coeffs;
  for (const auto& c : h.coefficients) coeffs.push_back(f->from_int(c));
  const auto roots = roots_in_field(Polynomial(f, coeffs), rng);
  if (roots.empty()) throw InternalError("class polynomial has no root in F_{p^2}");
  return roots.front();
}

}  // namespace modpoly
