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

#include "modpoly/torsion.hpp"

#include <optional>
#include <string>
#include <unordered_map>

#include "modpoly/errors.hpp"

namespace modpoly {
namespace {

constexpr std::uint64_t kExtensionSeed = 0x746f7273696f6e;

bool is_supersingular_trace(const TraceData& t) {
  const mpz_class a2 = mpz_class(static_cast<long>(t.trace)) * static_cast<long>(t.trace);
  const mpz_class q(static_cast<long>(t.q));
  return a2 == 0 || a2 == q || a2 == 4 * q;
}

void check_ell(const Curve& e, unsigned ell) {
  if (ell < 3 || !is_prime(ell)) throw PreconditionError("ℓ must be an odd prime");
  if (ell == e.field()->characteristic()) throw PreconditionError("ℓ must differ from the characteristic");
}

// l^i P' for the largest i keeping it nonzero: a point of exact order l.
// Empty if l^k P' is still nonzero, which means S was not the group order.
std::optional<CurvePoint> order_ell_multiple(const Curve& e, CurvePoint pt, unsigned ell, unsigned k) {
  for (unsigned i = 0; i < k; ++i) {
    CurvePoint next = e.scalar_mul_unchecked(ell, pt);
    if (next.is_infinity()) return pt;
    pt = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

unsigned torsion_extension_degree(const TraceData& trace, unsigned ell) {
  return torsion_extension_trials(trace, ell).front();
}

std::vector<unsigned> torsion_extension_trials(const TraceData& trace, unsigned ell) {
  if (is_supersingular_trace(trace)) {
    const mpz_class a2 = mpz_class(static_cast<long>(trace.trace)) * static_cast<long>(trace.trace);
    const mpz_class q(static_cast<long>(trace.q));
    if (a2 == 4 * q) return {ell - 1};
    if (a2 == 0) return {2 * (ell - 1)};
    return {3 * (ell - 1)};
  }
  return {ell * ell - 1, ell * (ell - 1)};
}

bool bsgs_member(const Curve& e, const CurvePoint& P, const CurvePoint& Q, unsigned ell) {
  unsigned m = 1;
  while (m * m < ell) ++m;
  std::unordered_map<std::string, unsigned> baby;
  CurvePoint cur = CurvePoint::infinity();
  for (unsigned j = 0; j < m; ++j) {
    baby.emplace(cur.to_string(), j);
    cur = e.add_unchecked(cur, P);
  }
  // cur = mP now.
  const CurvePoint giant = e.negate(cur);
  CurvePoint r = Q;
  for (unsigned i = 0; i <= m; ++i) {
    if (baby.count(r.to_string())) return true;
    r = e.add_unchecked(r, giant);
  }
  return false;
}

TorsionBasis torsion_basis(const Curve& e, unsigned ell, const TraceData& trace, Rng& rng,
                           TorsionStats* stats) {
  return torsion_basis(e, ell, trace, torsion_extension_degree(trace, ell), rng, stats);
}

TorsionBasis torsion_basis(const Curve& e, unsigned ell, const TraceData& trace, unsigned n,
                           Rng& rng, TorsionStats* stats) {
  check_ell(e, ell);
  TorsionBasis out;
  out.n = n;
  out.S = point_count_ext(trace.q, trace.trace, n);
  out.s = out.S;
  while (out.s % ell == 0) {
    out.s /= ell;
    ++out.k;
  }
  if (out.k < 2) throw PreconditionError("ℓ-valuation too small");

  // The modulus depends only on (field, n), so bases from separate calls
  // share one representation and can be compared.
  Rng ext_rng(mix_seed(kExtensionSeed, n));
  const FieldPtr ext = make_extension(e.field(), n, ext_rng);
  const Curve ee = e.base_change(ext);
  TorsionStats local;
  TorsionStats& st = stats ? *stats : local;
  for (int attempt = 0; attempt < kTorsionRetries; ++attempt) {
    ++st.draws;
    const CurvePoint u = random_point(ee, rng);
    const CurvePoint v = random_point(ee, rng);
    CurvePoint p1 = ee.scalar_mul_unchecked(out.s, u);
    CurvePoint q1 = ee.scalar_mul_unchecked(out.s, v);
    if (p1.is_infinity() || q1.is_infinity()) continue;
    ++st.draw_successes;
    auto P = order_ell_multiple(ee, std::move(p1), ell, out.k);
    auto Q = order_ell_multiple(ee, std::move(q1), ell, out.k);
    if (!P || !Q) continue;
    ++st.membership_tests;
    if (bsgs_member(ee, *P, *Q, ell)) {
      ++st.dependent;
      continue;
    }
    out.P = std::move(*P);
    out.Q = std::move(*Q);
    return out;
  }
  throw InternalError("retry budget exhausted");
}

}  // namespace modpoly
