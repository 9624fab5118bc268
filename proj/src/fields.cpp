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

#include "modpoly/fields.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <tuple>

#include "modpoly/errors.hpp"

namespace modpoly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw DomainError("division by zero");
  if (t0 < 0) t0 += static_cast<std::int64_t>(p);
  return static_cast<u64>(t0);
}

// Arithmetic on one coefficient of the base of an extension level. B is the
// flat width of a base element: 1 over F_p, 2 over F_{p^2}.
template <std::size_t B>
struct BaseOps;

template <>
struct BaseOps<1> {
  using E = std::array<u64, 1>;
  u64 p;
  u64 c;
  E zero() const { return {0}; }
  E one() const { return {1}; }
  bool is_zero(const E& a) const { return a[0] == 0; }
  E add(const E& a, const E& b) const { return {addmod(a[0], b[0], p)}; }
  E sub(const E& a, const E& b) const { return {submod(a[0], b[0], p)}; }
  E mul(const E& a, const E& b) const { return {mulmod(a[0], b[0], p)}; }
  E inv(const E& a) const { return {invmod(a[0], p)}; }
};

template <>
struct BaseOps<2> {
  using E = std::array<u64, 2>;
  u64 p;
  u64 c;
  E zero() const { return {0, 0}; }
  E one() const { return {1, 0}; }
  bool is_zero(const E& a) const { return a[0] == 0 && a[1] == 0; }
  E add(const E& a, const E& b) const { return {addmod(a[0], b[0], p), addmod(a[1], b[1], p)}; }
  E sub(const E& a, const E& b) const { return {submod(a[0], b[0], p), submod(a[1], b[1], p)}; }
  E mul(const E& a, const E& b) const {
    u64 r0 = (a[0] * b[0] % p + c * (a[1] * b[1] % p)) % p;
    u64 r1 = (a[0] * b[1] + a[1] * b[0]) % p;
    return {r0, r1};
  }
  E inv(const E& a) const {
    u64 norm = submod(a[0] * a[0] % p, c * (a[1] * a[1] % p) % p, p);
    u64 ni = invmod(norm, p);
    return {a[0] * ni % p, (p - a[1]) % p * ni % p};
  }
};

template <std::size_t B>
using Poly = std::vector<std::array<u64, B>>;

template <std::size_t B>
void trim(const BaseOps<B>& ops, Poly<B>& a) {
  while (!a.empty() && ops.is_zero(a.back())) a.pop_back();
}

// Remainder of a by b (b nonzero, trimmed); quotient optionally returned.
template <std::size_t B>
Poly<B> poly_rem(const BaseOps<B>& ops, Poly<B> a, const Poly<B>& b, Poly<B>* quotient) {
  trim(ops, a);
  const std::size_t db = b.size() - 1;
  const auto lead_inv = ops.inv(b.back());
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - db : 0, ops.zero());
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const auto factor = ops.mul(a.back(), lead_inv);
    if (quotient) (*quotient)[shift] = factor;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ops.sub(a[shift + i], ops.mul(factor, b[i]));
    }
    trim(ops, a);
  }
  return a;
}

template <std::size_t B>
Poly<B> poly_mul(const BaseOps<B>& ops, const Poly<B>& a, const Poly<B>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<B> r(a.size() + b.size() - 1, ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ops.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
  }
  return r;
}

template <std::size_t B>
std::size_t poly_gcd_degree(const BaseOps<B>& ops, Poly<B> a, Poly<B> b) {
  trim(ops, a);
  trim(ops, b);
  while (!b.empty()) {
    Poly<B> r = poly_rem<B>(ops, a, b, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Inverse of a modulo f by the extended Euclidean algorithm. Returns false
// when gcd(a, f) != 1.
template <std::size_t B>
bool poly_inverse_mod(const BaseOps<B>& ops, Poly<B> a, const Poly<B>& f, Poly<B>& out) {
  trim(ops, a);
  if (a.empty()) return false;
  Poly<B> r0 = f, r1 = a;
  Poly<B> t0, t1{ops.one()};
  while (r1.size() > 1) {
    Poly<B> q;
    Poly<B> r2 = poly_rem(ops, r0, r1, &q);
    Poly<B> qt = poly_mul(ops, q, t1);
    Poly<B> t2(std::max(t0.size(), qt.size()), ops.zero());
    for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
    for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = ops.sub(t2[i], qt[i]);
    trim(ops, t2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.empty()) return false;
  const auto c = ops.inv(r1[0]);
  out.assign(f.size() - 1, ops.zero());
  for (std::size_t i = 0; i < t1.size(); ++i) out[i] = ops.mul(t1[i], c);
  return true;
}

template <std::size_t B>
Poly<B> unflatten(const u64* flat, std::size_t n) {
  Poly<B> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < B; ++k) r[i][k] = flat[i * B + k];
  return r;
}

template <std::size_t B>
void flatten(const Poly<B>& a, std::size_t n, u64* out) {
  std::fill(out, out + n * B, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t k = 0; k < B; ++k) out[i * B + k] = a[i][k];
}

// Product in base[T]/(f) with delayed reduction: products are summed in
// Acc-wide accumulators and reduced once per output coefficient. High
// powers T^k (k >= m) are folded back using a precomputed table of T^k mod f.
template <class Acc>
void ext_mul_width1(u64 p, std::size_t m, const u64* table, const u64* a, const u64* b, u64* out) {
  thread_local std::vector<Acc> acc;
  thread_local std::vector<u64> prod;
  const std::size_t n = 2 * m - 1;
  acc.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const u64 ai = a[i];
    if (ai == 0) continue;
    Acc* row = acc.data() + i;
    for (std::size_t j = 0; j < m; ++j) row[j] += static_cast<Acc>(ai) * b[j];
  }
  prod.resize(n);
  for (std::size_t k = 0; k < n; ++k) prod[k] = static_cast<u64>(acc[k] % p);
  acc.assign(m, 0);
  for (std::size_t t = 0; t < m; ++t) acc[t] = prod[t];
  for (std::size_t k = m; k < n; ++k) {
    const u64 ck = prod[k];
    if (ck == 0) continue;
    const u64* row = table + (k - m) * m;
    for (std::size_t t = 0; t < m; ++t) acc[t] += static_cast<Acc>(ck) * row[t];
  }
  for (std::size_t t = 0; t < m; ++t) out[t] = static_cast<u64>(acc[t] % p);
}

template <class Acc>
void ext_mul_width2(u64 p, u64 c, std::size_t m, const u64* table, const u64* a, const u64* b,
                    u64* out) {
  thread_local std::vector<Acc> s00, s11, s01;
  thread_local std::vector<u64> prod;
  const std::size_t n = 2 * m - 1;
  s00.assign(n, 0);
  s11.assign(n, 0);
  s01.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const u64 a0 = a[2 * i], a1 = a[2 * i + 1];
    if (a0 == 0 && a1 == 0) continue;
    Acc* r00 = s00.data() + i;
    Acc* r11 = s11.data() + i;
    Acc* r01 = s01.data() + i;
    for (std::size_t j = 0; j < m; ++j) {
      const u64 b0 = b[2 * j], b1 = b[2 * j + 1];
      r00[j] += static_cast<Acc>(a0) * b0;
      r11[j] += static_cast<Acc>(a1) * b1;
      r01[j] += static_cast<Acc>(a0) * b1 + static_cast<Acc>(a1) * b0;
    }
  }
  prod.resize(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    prod[2 * k] = (static_cast<u64>(s00[k] % p) + c * static_cast<u64>(s11[k] % p)) % p;
    prod[2 * k + 1] = static_cast<u64>(s01[k] % p);
  }
  s00.assign(m, 0);
  s11.assign(m, 0);
  s01.assign(m, 0);
  for (std::size_t t = 0; t < m; ++t) {
    s00[t] = prod[2 * t];
    s01[t] = prod[2 * t + 1];
  }
  for (std::size_t k = m; k < n; ++k) {
    const u64 c0 = prod[2 * k], c1 = prod[2 * k + 1];
    if (c0 == 0 && c1 == 0) continue;
    const u64* row = table + 2 * (k - m) * m;
    for (std::size_t t = 0; t < m; ++t) {
      const u64 r0 = row[2 * t], r1 = row[2 * t + 1];
      s00[t] += static_cast<Acc>(c0) * r0;
      s11[t] += static_cast<Acc>(c1) * r1;
      s01[t] += static_cast<Acc>(c0) * r1 + static_cast<Acc>(c1) * r0;
    }
  }
  for (std::size_t t = 0; t < m; ++t) {
    out[2 * t] = (static_cast<u64>(s00[t] % p) + c * static_cast<u64>(s11[t] % p)) % p;
    out[2 * t + 1] = static_cast<u64>(s01[t] % p);
  }
}

u64 smallest_nonresidue(u64 p) {
  for (u64 c = 2; c < p; ++c) {
    if (powmod(c, (p - 1) / 2, p) == p - 1) return c;
  }
  throw InternalError("no quadratic non-residue found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field construction

FieldPtr Field::prime(std::uint64_t p) {
  if (p < 3 || p >= kMaxCharacteristic || !is_prime(p)) {
    throw DomainError("characteristic must be an odd prime below 2^31, got " + std::to_string(p));
  }
  auto f = std::make_shared<Field>(Passkey{});
  f->level_ = FieldLevel::kPrime;
  f->p_ = p;
  f->order_ = p;
  f->init_sqrt_data();
  return f;
}

FieldPtr Field::quadratic(std::uint64_t p) {
  FieldPtr base = prime(p);
  auto f = std::make_shared<Field>(Passkey{});
  f->level_ = FieldLevel::kQuadratic;
  f->p_ = p;
  f->degree_ = 2;
  f->total_degree_ = 2;
  f->base_width_ = 1;
  f->base_ = base;
  f->nonresidue_c_ = smallest_nonresidue(p);
  f->modulus_flat_ = {p - f->nonresidue_c_, 0, 1};
  f->order_ = mpz_class(p) * p;
  f->init_sqrt_data();
  return f;
}

std::shared_ptr<Field> Field::build_extension_ring(const FieldPtr& base,
                                                   std::vector<std::uint64_t> modulus_flat) {
  auto f = std::make_shared<Field>(Passkey{});
  const std::size_t width = base->total_degree();
  const std::size_t m = modulus_flat.size() / width - 1;
  f->level_ = FieldLevel::kExtension;
  f->p_ = base->characteristic();
  f->degree_ = m;
  f->total_degree_ = m * width;
  f->base_width_ = width;
  f->base_ = base;
  f->nonresidue_c_ = base->level() == FieldLevel::kQuadratic ? base->quadratic_nonresidue() : 0;
  f->modulus_flat_ = std::move(modulus_flat);
  mpz_pow_ui(f->order_.get_mpz_t(), base->order().get_mpz_t(), m);

  const u128 bound = static_cast<u128>(2 * m + 2) * (f->p_ - 1) * (f->p_ - 1) + f->p_;
  f->narrow_accumulator_ = bound < (static_cast<u128>(1) << 63);

  // Rows T^k mod f for k = m .. 2m-2.
  auto build = [&](auto ops) {
    constexpr std::size_t W = std::tuple_size_v<typename decltype(ops)::E>;
    using E = typename decltype(ops)::E;
    Poly<W> fm = unflatten<W>(f->modulus_flat_.data(), m + 1);
    Poly<W> row(m);
    for (std::size_t t = 0; t < m; ++t) row[t] = ops.sub(ops.zero(), fm[t]);
    f->reduction_table_.assign((m > 1 ? m - 1 : 0) * m * W, 0);
    for (std::size_t k = 0; k + 1 < m; ++k) {
      flatten<W>(row, m, f->reduction_table_.data() + k * m * W);
      E top = row[m - 1];
      for (std::size_t t = m - 1; t > 0; --t) row[t] = ops.sub(row[t - 1], ops.mul(top, fm[t]));
      row[0] = ops.sub(ops.zero(), ops.mul(top, fm[0]));
    }
  };
  if (width == 1) {
    build(BaseOps<1>{f->p_, 0});
  } else {
    build(BaseOps<2>{f->p_, f->nonresidue_c_});
  }
  return f;
}

bool Field::modulus_is_irreducible() const {
  const std::size_t m = degree_;
  const std::size_t w = base_width_;
  std::vector<u64> t_flat(total_degree_, 0);
  t_flat[w] = 1;
  FieldElement t_elem(shared_from_this(), t_flat);
  FieldElement h = t_elem;
  auto gcd_trivial = [&](const FieldElement& diff) {
    auto check = [&](auto ops) {
      constexpr std::size_t W = std::tuple_size_v<typename decltype(ops)::E>;
      Poly<W> a = unflatten<W>(diff.flat().data(), m);
      Poly<W> f = unflatten<W>(modulus_flat_.data(), m + 1);
      return poly_gcd_degree<W>(ops, a, f) == 0;
    };
    return w == 1 ? check(BaseOps<1>{p_, 0}) : check(BaseOps<2>{p_, nonresidue_c_});
  };
  // Ben-Or: f is irreducible iff gcd(T^(Q^i) - T, f) = 1 for all i <= m/2.
  // The final T^(Q^m) == T check is Rabin's condition and costs nothing
  // extra here.
  for (std::size_t i = 1; i <= m; ++i) {
    h = h.pow(base_->order());
    if (2 * i <= m && !gcd_trivial(h - t_elem)) return false;
  }
  return h == t_elem;
}

void Field::init_sqrt_data() {
  mpz_class q1 = order_ - 1;
  two_adicity_ = static_cast<unsigned>(mpz_scan1(q1.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(odd_part_.get_mpz_t(), q1.get_mpz_t(), two_adicity_);
  const mpz_class half = q1 / 2;
  FieldPtr self = shared_from_this();
  Rng rng(0x6e6f6e7265736964ULL);
  for (int trial = 0; trial < 4096; ++trial) {
    FieldElement z = random(rng);
    if (z.is_zero()) continue;
    FieldElement e = z.pow(half);
    if (!e.is_one()) {
      FieldElement g = z.pow(odd_part_);
      sylow_generator_.assign(g.flat().begin(), g.flat().end());
      return;
    }
  }
  throw InternalError("no quadratic non-residue found in " + describe());
}

FieldPtr Field::extension(const FieldPtr& base, const std::vector<FieldElement>& modulus) {
  if (!base || base->level() == FieldLevel::kExtension) {
    throw DomainError("extensions are built over a prime or quadratic level");
  }
  if (modulus.size() < 3) throw DomainError("extension modulus must have degree >= 2");
  std::vector<u64> flat;
  for (const auto& c : modulus) {
    FieldElement e = base->embed(c);
    flat.insert(flat.end(), e.flat().begin(), e.flat().end());
  }
  if (!modulus.back().is_one()) throw DomainError("extension modulus must be monic");
  auto f = build_extension_ring(base, std::move(flat));
  if (!f->modulus_is_irreducible()) throw DomainError("extension modulus is not irreducible");
  f->init_sqrt_data();
  return f;
}

FieldPtr make_extension(const FieldPtr& base, std::size_t m, Rng& rng) {
  if (m == 0) throw DomainError("extension degree must be positive");
  if (m == 1) return base;
  if (base->level() == FieldLevel::kExtension) {
    throw DomainError("extensions are built over a prime or quadratic level");
  }
  const std::size_t w = base->total_degree();
  for (std::size_t trial = 0; trial < 64 * m; ++trial) {
    std::vector<u64> flat;
    flat.reserve((m + 1) * w);
    FieldElement c0;
    do {
      c0 = base->random(rng);
    } while (c0.is_zero());
    flat.insert(flat.end(), c0.flat().begin(), c0.flat().end());
    for (std::size_t i = 1; i < m; ++i) {
      FieldElement c = base->random(rng);
      flat.insert(flat.end(), c.flat().begin(), c.flat().end());
    }
    flat.push_back(1);
    for (std::size_t k = 1; k < w; ++k) flat.push_back(0);
    auto f = Field::build_extension_ring(base, std::move(flat));
    if (f->modulus_is_irreducible()) {
      f->init_sqrt_data();
      return f;
    }
  }
  throw InternalError("irreducible search failed for degree " + std::to_string(m));
}

// ---------------------------------------------------------------------------
// Field accessors

std::vector<FieldElement> Field::modulus() const {
  std::vector<FieldElement> out;
  if (level_ == FieldLevel::kPrime) return out;
  for (std::size_t i = 0; i <= degree_; ++i) {
    std::vector<u64> c(modulus_flat_.begin() + i * base_width_,
                       modulus_flat_.begin() + (i + 1) * base_width_);
    out.emplace_back(base_, std::move(c));
  }
  return out;
}

FieldElement Field::zero() const { return FieldElement(shared_from_this(), std::vector<u64>(total_degree_, 0)); }

FieldElement Field::one() const {
  std::vector<u64> v(total_degree_, 0);
  v[0] = 1;
  return FieldElement(shared_from_this(), std::move(v));
}

FieldElement Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  std::vector<u64> flat(total_degree_, 0);
  flat[0] = static_cast<u64>(r);
  return FieldElement(shared_from_this(), std::move(flat));
}

FieldElement Field::from_int(const mpz_class& v) const {
  std::vector<u64> flat(total_degree_, 0);
  flat[0] = mpz_fdiv_ui(v.get_mpz_t(), p_);
  return FieldElement(shared_from_this(), std::move(flat));
}

FieldElement Field::from_flat(std::span<const std::int64_t> flat) const {
  if (flat.size() > total_degree_) {
    throw DomainError("too many coefficients for " + describe());
  }
  std::vector<u64> v(total_degree_, 0);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    std::int64_t r = flat[i] % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    v[i] = static_cast<u64>(r);
  }
  return FieldElement(shared_from_this(), std::move(v));
}

FieldElement Field::from_flat_unchecked(std::vector<std::uint64_t> flat) const {
  return FieldElement(shared_from_this(), std::move(flat));
}

FieldElement Field::from_coefficients(const std::vector<FieldElement>& coeffs) const {
  if (level_ == FieldLevel::kPrime) {
    if (coeffs.size() != 1) throw DomainError("prime level takes one coefficient");
    return embed(coeffs[0]);
  }
  if (coeffs.size() > degree_) throw DomainError("too many coefficients for " + describe());
  std::vector<u64> flat(total_degree_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    FieldElement c = base_->embed(coeffs[i]);
    std::copy(c.flat().begin(), c.flat().end(), flat.begin() + i * base_width_);
  }
  return FieldElement(shared_from_this(), std::move(flat));
}

FieldElement Field::generator() const {
  if (level_ == FieldLevel::kPrime) throw DomainError("prime level has no generator");
  std::vector<u64> flat(total_degree_, 0);
  flat[base_width_] = 1;
  return FieldElement(shared_from_this(), std::move(flat));
}

FieldElement Field::parse(std::string_view text) const {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw DomainError("cannot parse field element '" + std::string(text) + "'");
    }
    values.push_back(v);
    pos = end + 1;
  }
  return from_flat(values);
}

FieldElement Field::random(Rng& rng) const {
  std::vector<u64> flat(total_degree_);
  for (auto& v : flat) v = uniform_below(rng, p_);
  return FieldElement(shared_from_this(), std::move(flat));
}

bool Field::same_as(const Field& other) const {
  if (this == &other) return true;
  if (level_ != other.level_ || p_ != other.p_ || degree_ != other.degree_) return false;
  if (modulus_flat_ != other.modulus_flat_) return false;
  if (base_ && other.base_) return base_->same_as(*other.base_);
  return !base_ && !other.base_;
}

bool Field::has_subfield(const Field& sub) const {
  if (same_as(sub)) return true;
  return base_ && base_->has_subfield(sub);
}

FieldElement Field::embed(const FieldElement& a) const {
  if (!a.valid()) throw DomainError("embedding an empty element");
  if (same_as(*a.field())) return FieldElement(shared_from_this(), std::vector<u64>(a.flat().begin(), a.flat().end()));
  if (!base_) throw DomainError("field mismatch: " + a.field()->describe() + " is not a subfield of " + describe());
  FieldElement b = base_->embed(a);
  std::vector<u64> flat(total_degree_, 0);
  std::copy(b.flat().begin(), b.flat().end(), flat.begin());
  return FieldElement(shared_from_this(), std::move(flat));
}

std::optional<FieldElement> Field::descend(const FieldElement& a, const FieldPtr& sub) const {
  if (!a.valid() || !same_as(*a.field())) throw DomainError("field mismatch in descend");
  if (same_as(*sub)) return a;
  if (!base_ || !base_->has_subfield(*sub)) {
    throw DomainError("field mismatch: " + sub->describe() + " is not a subfield of " + describe());
  }
  auto flat = a.flat();
  for (std::size_t i = base_width_; i < flat.size(); ++i) {
    if (flat[i] != 0) return std::nullopt;
  }
  FieldElement b(base_, std::vector<u64>(flat.begin(), flat.begin() + base_width_));
  return base_->descend(b, sub);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (total_degree_ > 1) os << "^" << total_degree_;
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Kernels

void Field::mul_into(const u64* a, const u64* b, u64* out) const {
  const u64 p = p_;
  switch (level_) {
    case FieldLevel::kPrime:
      out[0] = a[0] * b[0] % p;
      return;
    case FieldLevel::kQuadratic: {
      const u64 r0 = (a[0] * b[0] % p + nonresidue_c_ * (a[1] * b[1] % p)) % p;
      const u64 r1 = (a[0] * b[1] + a[1] * b[0]) % p;
      out[0] = r0;
      out[1] = r1;
      return;
    }
    case FieldLevel::kExtension:
      if (base_width_ == 1) {
        if (narrow_accumulator_) {
          ext_mul_width1<u64>(p, degree_, reduction_table_.data(), a, b, out);
        } else {
          ext_mul_width1<u128>(p, degree_, reduction_table_.data(), a, b, out);
        }
      } else {
        if (narrow_accumulator_) {
          ext_mul_width2<u64>(p, nonresidue_c_, degree_, reduction_table_.data(), a, b, out);
        } else {
          ext_mul_width2<u128>(p, nonresidue_c_, degree_, reduction_table_.data(), a, b, out);
        }
      }
      return;
  }
}

bool Field::inverse_into(const u64* a, u64* out) const {
  switch (level_) {
    case FieldLevel::kPrime:
      if (a[0] == 0) return false;
      out[0] = invmod(a[0], p_);
      return true;
    case FieldLevel::kQuadratic: {
      BaseOps<2> ops{p_, nonresidue_c_};
      std::array<u64, 2> e{a[0], a[1]};
      if (ops.is_zero(e)) return false;
      auto r = ops.inv(e);
      out[0] = r[0];
      out[1] = r[1];
      return true;
    }
    case FieldLevel::kExtension: {
      auto run = [&](auto ops) {
        constexpr std::size_t W = std::tuple_size_v<typename decltype(ops)::E>;
        Poly<W> pa = unflatten<W>(a, degree_);
        Poly<W> f = unflatten<W>(modulus_flat_.data(), degree_ + 1);
        Poly<W> r;
        if (!poly_inverse_mod<W>(ops, pa, f, r)) return false;
        flatten<W>(r, degree_, out);
        return true;
      };
      return base_width_ == 1 ? run(BaseOps<1>{p_, 0}) : run(BaseOps<2>{p_, nonresidue_c_});
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// FieldElement

void FieldElement::check_same_field(const FieldElement& b) const {
  if (!field_ || !b.field_) throw DomainError("field mismatch: empty element");
  if (field_.get() != b.field_.get() && !field_->same_as(*b.field_)) {
    throw DomainError("field mismatch: " + field_->describe() + " vs " + b.field_->describe());
  }
}

std::vector<FieldElement> FieldElement::coefficients() const {
  if (field_->level() == FieldLevel::kPrime) return {*this};
  std::vector<FieldElement> out;
  const std::size_t w = field_->base_width_;
  for (std::size_t i = 0; i < field_->degree(); ++i) {
    out.emplace_back(field_->base(), std::vector<u64>(flat_.begin() + i * w, flat_.begin() + (i + 1) * w));
  }
  return out;
}

std::uint64_t FieldElement::value() const {
  if (field_->level() != FieldLevel::kPrime) throw DomainError("value() needs a prime-level element");
  return flat_[0];
}

bool FieldElement::is_zero() const {
  return std::all_of(flat_.begin(), flat_.end(), [](u64 v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (flat_.empty() || flat_[0] != 1) return false;
  return std::all_of(flat_.begin() + 1, flat_.end(), [](u64 v) { return v == 0; });
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const u64 p = field_->characteristic();
  for (auto& v : r.flat_) v = v == 0 ? 0 : p - v;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  check_same_field(b);
  const u64 p = field_->characteristic();
  for (std::size_t i = 0; i < flat_.size(); ++i) flat_[i] = addmod(flat_[i], b.flat_[i], p);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  check_same_field(b);
  const u64 p = field_->characteristic();
  for (std::size_t i = 0; i < flat_.size(); ++i) flat_[i] = submod(flat_[i], b.flat_[i], p);
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  std::vector<u64> out(a.flat_.size());
  a.field_->mul_into(a.flat_.data(), b.flat_.data(), out.data());
  return FieldElement(a.field_, std::move(out));
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  *this = *this * b;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  check_same_field(b);
  *this = *this * b.inverse();
  return *this;
}

FieldElement FieldElement::scaled(std::int64_t k) const {
  const u64 p = field_->characteristic();
  std::int64_t r = k % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  FieldElement out = *this;
  for (auto& v : out.flat_) v = mulmod(v, static_cast<u64>(r), p);
  return out;
}

FieldElement FieldElement::inverse() const {
  std::vector<u64> out(flat_.size());
  if (!field_->inverse_into(flat_.data(), out.data())) throw DomainError("division by zero");
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  // Fixed 4-bit window.
  std::array<FieldElement, 16> table;
  table[0] = field_->one();
  table[1] = *this;
  for (int i = 2; i < 16; ++i) table[i] = table[i - 1] * *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  const std::size_t windows = (bits + 3) / 4;
  FieldElement r = field_->one();
  for (std::size_t w = windows; w-- > 0;) {
    if (w + 1 != windows) {
      for (int s = 0; s < 4; ++s) r = r * r;
    }
    unsigned digit = 0;
    for (int b = 3; b >= 0; --b) {
      digit = (digit << 1) | static_cast<unsigned>(mpz_tstbit(e.get_mpz_t(), 4 * w + b));
    }
    if (digit) r = r * table[digit];
  }
  return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
  if (a.flat_ != b.flat_) return false;
  return a.field_.get() == b.field_.get() || a.field_->same_as(*b.field_);
}

bool operator<(const FieldElement& a, const FieldElement& b) { return a.flat_ < b.flat_; }

std::string FieldElement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < flat_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(flat_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Square roots and characters

std::optional<FieldElement> sqrt(const FieldElement& a) {
  if (a.is_zero()) return a;
  const Field& f = *a.field();
  FieldElement c(a.field(), f.sylow_generator_);
  FieldElement t = a.pow(f.odd_part_);
  FieldElement r = a.pow(mpz_class((f.odd_part_ + 1) / 2));
  unsigned m = f.two_adicity_;
  while (!t.is_one()) {
    unsigned i = 0;
    FieldElement t2 = t;
    while (!t2.is_one()) {
      t2 = t2 * t2;
      if (++i == m) return std::nullopt;
    }
    FieldElement b = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  return r;
}

bool is_square(const FieldElement& a) {
  if (a.is_zero()) return true;
  return a.pow(mpz_class((a.field()->order() - 1) / 2)).is_one();
}

int quadratic_character(const mpz_class& d, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError("quadratic_character needs an odd prime");
  const u64 r = mpz_fdiv_ui(d.get_mpz_t(), p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

FieldElement frobenius_p2(const FieldElement& a) {
  if (!a.valid() || a.field()->level() != FieldLevel::kQuadratic) {
    throw DomainError("frobenius_p2 needs an element of F_{p^2}");
  }
  // s^p = s * c^((p-1)/2) = -s.
  auto flat = a.flat();
  const u64 p = a.field()->characteristic();
  return a.field()->from_flat_unchecked({flat[0], flat[1] == 0 ? 0 : p - flat[1]});
}

}  // namespace modpoly
