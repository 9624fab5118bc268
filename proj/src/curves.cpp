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

#include "modpoly/curves.hpp"

#include <vector>

#include "modpoly/errors.hpp"

namespace modpoly {

namespace {

// Point in Jacobian coordinates on y^2 = x^3 + A x + B; Z = 0 is infinity.
struct Jacobian {
  FieldElement x, y, z;
};

class ShortArithmetic {
 public:
  explicit ShortArithmetic(const FieldElement& a) : a_(a), a_is_zero_(a.is_zero()) {}

  Jacobian dbl(const Jacobian& p) const {
    if (p.z.is_zero() || p.y.is_zero()) return infinity(p);
    const FieldElement xx = p.x.square();
    const FieldElement yy = p.y.square();
    const FieldElement yyyy = yy.square();
    const FieldElement zz = p.z.square();
    const FieldElement s = ((p.x + yy).square() - xx - yyyy).scaled(2);
    FieldElement m = xx.scaled(3);
    if (!a_is_zero_) m += a_ * zz.square();
    const FieldElement t = m.square() - s.scaled(2);
    Jacobian r;
    r.x = t;
    r.y = m * (s - t) - yyyy.scaled(8);
    r.z = (p.y + p.z).square() - yy - zz;
    return r;
  }

  // p + (qx, qy) with the second point affine.
  Jacobian madd(const Jacobian& p, const FieldElement& qx, const FieldElement& qy) const {
    if (p.z.is_zero()) return Jacobian{qx, qy, qx.field()->one()};
    const FieldElement z1z1 = p.z.square();
    const FieldElement u2 = qx * z1z1;
    const FieldElement s2 = qy * p.z * z1z1;
    const FieldElement h = u2 - p.x;
    const FieldElement r = (s2 - p.y).scaled(2);
    if (h.is_zero()) {
      if (r.is_zero()) return dbl(p);
      return infinity(p);
    }
    const FieldElement hh = h.square();
    const FieldElement i = hh.scaled(4);
    const FieldElement j = h * i;
    const FieldElement v = p.x * i;
    Jacobian out;
    out.x = r.square() - j - v.scaled(2);
    out.y = r * (v - out.x) - (p.y * j).scaled(2);
    out.z = (p.z + h).square() - z1z1 - hh;
    return out;
  }

  static Jacobian infinity(const Jacobian& like) {
    const FieldPtr& f = like.x.field();
    return Jacobian{f->one(), f->one(), f->zero()};
  }

 private:
  FieldElement a_;
  bool a_is_zero_;
};

// Non-adjacent form digits of k, least significant first.
std::vector<int> naf_digits(mpz_class k) {
  std::vector<int> d;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) {
      const int r = static_cast<int>(mpz_fdiv_ui(k.get_mpz_t(), 4));
      const int digit = r == 1 ? 1 : -1;
      d.push_back(digit);
      k -= digit;
    } else {
      d.push_back(0);
    }
    k >>= 1;
  }
  return d;
}

}  // namespace

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

std::string CurvePoint::to_string() const {
  if (infinity_) return "O";
  return "(" + x_.to_string() + " : " + y_.to_string() + ")";
}

Curve::Curve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
  const FieldPtr& f = a1_.field();
  if (!f) throw DomainError("curve coefficients must be set");
  for (const FieldElement* c : {&a2_, &a3_, &a4_, &a6_}) {
    if (!c->valid() || !f->same_as(*c->field())) throw DomainError("field mismatch in curve coefficients");
  }
  if (f->characteristic() <= 3) throw DomainError("curves need characteristic > 3");
  if (discriminant().is_zero()) throw DomainError("singular curve (discriminant 0)");
}

Curve Curve::short_weierstrass(const FieldElement& a4, const FieldElement& a6) {
  const FieldPtr& f = a4.field();
  return Curve(f->zero(), f->zero(), f->zero(), a4, a6);
}

FieldElement Curve::b2() const { return a1_.square() + a2_.scaled(4); }
FieldElement Curve::b4() const { return a4_.scaled(2) + a1_ * a3_; }
FieldElement Curve::b6() const { return a3_.square() + a6_.scaled(4); }
FieldElement Curve::b8() const {
  return a1_.square() * a6_ + (a2_ * a6_).scaled(4) - a1_ * a3_ * a4_ + a2_ * a3_.square() - a4_.square();
}
FieldElement Curve::c4() const { return b2().square() - b4().scaled(24); }
FieldElement Curve::c6() const {
  const FieldElement b2v = b2();
  return -(b2v.square() * b2v) + (b2v * b4()).scaled(36) - b6().scaled(216);
}

FieldElement Curve::discriminant() const {
  const FieldElement b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
  return -(b2v.square() * b8v) - (b4v.square() * b4v).scaled(8) - b6v.square().scaled(27) +
         (b2v * b4v * b6v).scaled(9);
}

FieldElement Curve::j_invariant() const {
  const FieldElement c = c4();
  return c.square() * c / discriminant();
}

Curve Curve::base_change(const FieldPtr& ext) const {
  return Curve(ext->embed(a1_), ext->embed(a2_), ext->embed(a3_), ext->embed(a4_), ext->embed(a6_));
}

bool Curve::contains(const CurvePoint& pt) const {
  if (pt.is_infinity()) return true;
  if (!pt.x().valid() || !field()->same_as(*pt.x().field()) || !field()->same_as(*pt.y().field())) {
    return false;
  }
  const FieldElement& x = pt.x();
  const FieldElement& y = pt.y();
  const FieldElement lhs = y.square() + a1_ * x * y + a3_ * y;
  const FieldElement rhs = ((x + a2_) * x + a4_) * x + a6_;
  return lhs == rhs;
}

void Curve::require_on_curve(const CurvePoint& pt) const {
  if (!contains(pt)) throw DomainError("point not on curve");
}

CurvePoint Curve::negate(const CurvePoint& pt) const {
  if (pt.is_infinity()) return pt;
  return CurvePoint(pt.x(), -pt.y() - a1_ * pt.x() - a3_);
}

CurvePoint Curve::add(const CurvePoint& a, const CurvePoint& b) const {
  require_on_curve(a);
  require_on_curve(b);
  return add_unchecked(a, b);
}

CurvePoint Curve::add_unchecked(const CurvePoint& a, const CurvePoint& b) const {
  if (a.is_infinity()) return b;
  if (b.is_infinity()) return a;
  FieldElement lambda, nu;
  if (a.x() == b.x()) {
    const FieldElement denom = a.y().scaled(2) + a1_ * a.x() + a3_;
    if (!(a.y() == b.y()) || denom.is_zero()) return CurvePoint::infinity();
    const FieldElement num = a.x().square().scaled(3) + (a2_ * a.x()).scaled(2) + a4_ - a1_ * a.y();
    lambda = num / denom;
  } else {
    lambda = (b.y() - a.y()) / (b.x() - a.x());
  }
  nu = a.y() - lambda * a.x();
  const FieldElement x3 = lambda.square() + a1_ * lambda - a2_ - a.x() - b.x();
  const FieldElement y3 = -(lambda + a1_) * x3 - nu - a3_;
  return CurvePoint(x3, y3);
}

CurvePoint Curve::scalar_mul(const mpz_class& k, const CurvePoint& pt) const {
  require_on_curve(pt);
  return scalar_mul_unchecked(k, pt);
}

CurvePoint Curve::scalar_mul_unchecked(const mpz_class& k, const CurvePoint& pt) const {
  if (k < 0) return scalar_mul_unchecked(mpz_class(-k), negate(pt));
  if (k == 0 || pt.is_infinity()) return CurvePoint::infinity();

  // Work on the isomorphic model Y^2 = X^3 - 27 c4 X - 54 c6 with
  // X = 36x + 3 b2, Y = 108 (2y + a1 x + a3).
  const bool direct = is_short();
  FieldElement a_short, px, py;
  if (direct) {
    a_short = a4_;
    px = pt.x();
    py = pt.y();
  } else {
    a_short = c4().scaled(-27);
    px = pt.x().scaled(36) + b2().scaled(3);
    py = (pt.y().scaled(2) + a1_ * pt.x() + a3_).scaled(108);
  }
  const ShortArithmetic arith(a_short);
  const FieldElement npy = -py;
  const std::vector<int> digits = naf_digits(k);
  Jacobian acc = ShortArithmetic::infinity(Jacobian{px, py, px});
  for (std::size_t i = digits.size(); i-- > 0;) {
    acc = arith.dbl(acc);
    if (digits[i] == 1) acc = arith.madd(acc, px, py);
    if (digits[i] == -1) acc = arith.madd(acc, px, npy);
  }
  if (acc.z.is_zero()) return CurvePoint::infinity();
  const FieldElement zi = acc.z.inverse();
  const FieldElement zi2 = zi.square();
  FieldElement x = acc.x * zi2;
  FieldElement y = acc.y * zi2 * zi;
  if (direct) return CurvePoint(x, y);
  const FieldElement inv36 = field()->from_int(36).inverse();
  const FieldElement inv216 = field()->from_int(216).inverse();
  x = (x - b2().scaled(3)) * inv36;
  y = y * inv216 - (a1_ * x + a3_) * field()->from_int(2).inverse();
  return CurvePoint(x, y);
}

std::string Curve::to_string() const {
  return a1_.to_string() + " " + a2_.to_string() + " " + a3_.to_string() + " " + a4_.to_string() + " " +
         a6_.to_string();
}

bool operator==(const Curve& a, const Curve& b) {
  return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
}

Curve curve_from_j(const FieldElement& j) {
  const FieldPtr& f = j.field();
  if (f->characteristic() <= 3) throw DomainError("curve_from_j needs characteristic > 3");
  if (j.is_zero()) return Curve::short_weierstrass(f->zero(), f->one());
  const FieldElement k = f->from_int(1728) - j;
  if (k.is_zero()) return Curve::short_weierstrass(f->one(), f->zero());
  return Curve::short_weierstrass((j * k).scaled(3), (j * k.square()).scaled(2));
}

CurvePoint random_point(const Curve& e, Rng& rng) {
  const FieldPtr& f = e.field();
  const FieldElement half = f->from_int(2).inverse();
  for (;;) {
    const FieldElement x = f->random(rng);
    // (y + (a1 x + a3)/2)^2 = x^3 + a2 x^2 + a4 x + a6 + (a1 x + a3)^2 / 4
    const FieldElement shift = (e.a1() * x + e.a3()) * half;
    const FieldElement rhs = ((x + e.a2()) * x + e.a4()) * x + e.a6() + shift.square();
    auto r = sqrt(rhs);
    if (!r) continue;
    FieldElement root = *r;
    if (rng() & 1) root = -root;
    return CurvePoint(x, root - shift);
  }
}

TraceData supersingular_trace(const Curve& e, Rng& rng) {
  const FieldPtr& f = e.field();
  if (f->level() != FieldLevel::kQuadratic) {
    throw DomainError("supersingular_trace expects a curve over F_{p^2}");
  }
  const std::int64_t p = static_cast<std::int64_t>(f->characteristic());
  const std::int64_t q = p * p;
  std::vector<std::int64_t> alive{0, p, -p, 2 * p, -2 * p};
  int points = 0;
  while (points < kTraceConfirmations || alive.size() > 1) {
    if (points >= 16 * kTraceConfirmations) break;
    const CurvePoint pt = random_point(e, rng);
    // (q + 1 - a) P = O  <=>  (q + 1) P = a P.
    const CurvePoint q1 = e.scalar_mul_unchecked(mpz_class(static_cast<long>(q + 1)), pt);
    const CurvePoint pp = e.scalar_mul_unchecked(mpz_class(static_cast<long>(p)), pt);
    const CurvePoint p2 = e.add_unchecked(pp, pp);
    std::vector<std::int64_t> next;
    for (std::int64_t a : alive) {
      CurvePoint ap = CurvePoint::infinity();
      if (a == p) ap = pp;
      if (a == -p) ap = e.negate(pp);
      if (a == 2 * p) ap = p2;
      if (a == -2 * p) ap = e.negate(p2);
      if (q1 == ap) next.push_back(a);
    }
    alive = std::move(next);
    ++points;
    if (alive.empty()) break;
  }
  if (alive.size() != 1) throw PreconditionError("not supersingular or trace undetermined");
  return TraceData{q, alive.front()};
}

mpz_class point_count_ext(const mpz_class& q, std::int64_t trace, unsigned n) {
  const mpz_class a(static_cast<long>(trace));
  if (a * a > 4 * q) throw DomainError("trace violates the Hasse bound");
  if (n == 0) throw DomainError("extension degree must be positive");
  mpz_class t_prev = 2, t = a;
  for (unsigned k = 2; k <= n; ++k) {
    mpz_class t_next = a * t - q * t_prev;
    t_prev = t;
    t = t_next;
  }
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
  return qn + 1 - t;
}

mpz_class brute_force_point_count(const Curve& e) {
  const FieldPtr& f = e.field();
  if (f->level() == FieldLevel::kExtension || f->order() > 1000000) {
    throw DomainError("brute-force point counting is limited to small prime or quadratic fields");
  }
  const std::size_t order = f->order().get_ui();
  const std::uint64_t p = f->characteristic();
  const std::size_t width = f->total_degree();
  auto element_at = [&](std::size_t idx) {
    std::vector<std::int64_t> flat(width);
    for (std::size_t i = 0; i < width; ++i) {
      flat[i] = static_cast<std::int64_t>(idx % p);
      idx /= p;
    }
    return f->from_flat(flat);
  };
  auto index_of = [&](const FieldElement& a) {
    std::size_t idx = 0;
    auto flat = a.flat();
    for (std::size_t i = width; i-- > 0;) idx = idx * p + flat[i];
    return idx;
  };
  // Number of square roots of each element.
  std::vector<int> roots(order, 0);
  for (std::size_t i = 0; i < order; ++i) roots[index_of(element_at(i).square())] += 1;
  mpz_class count = 1;  // infinity
  const FieldElement four = f->from_int(4);
  for (std::size_t i = 0; i < order; ++i) {
    const FieldElement x = element_at(i);
    const FieldElement lin = e.a1() * x + e.a3();
    const FieldElement d = (((x + e.a2()) * x + e.a4()) * x + e.a6()) * four + lin.square();
    count += roots[index_of(d)];
  }
  return count;
}

}  // namespace modpoly
