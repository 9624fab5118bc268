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

#include "modpoly/polynomial.hpp"

#include <algorithm>

#include "modpoly/errors.hpp"

namespace modpoly {

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_->embed(c);
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const FieldPtr& field, std::span<const FieldElement> roots) {
  std::vector<FieldElement> c{field->one()};
  for (const auto& r : roots) {
    const FieldElement neg = -field->embed(r);
    c.push_back(field->zero());
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] + neg * c[i];
    c[0] = neg * c[0];
  }
  return Polynomial(field, std::move(c));
}

Polynomial Polynomial::monomial(const FieldPtr& field, std::size_t k) {
  std::vector<FieldElement> c(k + 1, field->zero());
  c[k] = field->one();
  return Polynomial(field, std::move(c));
}

FieldElement Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

FieldElement Polynomial::leading() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

FieldElement Polynomial::evaluate(const FieldElement& x) const {
  const FieldElement xe = field_->embed(x);
  FieldElement v = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * xe + coeffs_[i];
  return v;
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::operator+(const Polynomial& b) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), b.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& b) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), b.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& b) const {
  if (is_zero() || b.is_zero()) return Polynomial(field_);
  std::vector<FieldElement> c(coeffs_.size() + b.coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * b.coeffs_[j];
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  std::vector<FieldElement> r = coeffs_;
  const FieldElement ce = field_->embed(c);
  for (auto& v : r) v *= ce;
  return Polynomial(field_, std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& b) const {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  std::vector<FieldElement> rem = coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  const FieldElement lead_inv = b.leading().inverse();
  std::vector<FieldElement> quot(rem.size() >= b.coeffs_.size() ? rem.size() - db : 0, field_->zero());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const FieldElement f = rem[k] * lead_inv;
    quot[k - db] = f;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= f * b.coeffs_[i];
  }
  rem.resize(std::min(rem.size(), db));
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Polynomial Polynomial::powmod(const mpz_class& e, const Polynomial& m) const {
  Polynomial result(field_, {field_->one()});
  result = result % m;
  Polynomial base = *this % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

void split_roots(const Polynomial& g, Rng& rng, std::vector<FieldElement>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g.coefficient(0) / g.coefficient(1)));
    return;
  }
  const FieldPtr& f = g.field();
  const mpz_class half = (f->order() - 1) / 2;
  for (;;) {
    Polynomial shifted(f, {f->random(rng), f->one()});
    Polynomial h = shifted.powmod(half, g) - Polynomial(f, {f->one()});
    Polynomial d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_roots(d, rng, out);
      split_roots(g.divmod(d).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FieldElement> roots_in_field(const Polynomial& f, Rng& rng) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  const FieldPtr& field = f.field();
  Polynomial x = Polynomial::monomial(field, 1);
  Polynomial frob = x.powmod(field->order(), f);
  Polynomial g = gcd(f, frob - x);
  std::vector<FieldElement> out;
  split_roots(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modpoly
