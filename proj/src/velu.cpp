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

#include "modpoly/velu.hpp"

#include "modpoly/errors.hpp"

namespace modpoly {
namespace {

// In-place inversion of every entry with a single field inversion.
void batch_invert(std::vector<FieldElement>& xs) {
  if (xs.empty()) return;
  std::vector<FieldElement> prefix;
  prefix.reserve(xs.size());
  prefix.push_back(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) prefix.push_back(prefix.back() * xs[i]);
  FieldElement inv = prefix.back().inverse();
  for (std::size_t i = xs.size() - 1; i > 0; --i) {
    FieldElement next = inv * prefix[i - 1];
    inv *= xs[i];
    xs[i] = std::move(next);
  }
  xs[0] = std::move(inv);
}

void add_point(const Curve& e, const FieldElement& b2, const FieldElement& b4, const CurvePoint& q,
               VeluAccumulator& acc) {
  const FieldElement& x = q.x();
  const FieldElement& y = q.y();
  const FieldElement tq = x.square().scaled(6) + b2 * x + b4;
  FieldElement gy = -(y.scaled(2) + e.a1() * x + e.a3());
  const FieldElement uq = gy.square();
  acc.t += tq;
  acc.w += uq + x * tq;
}

// Velu sums for every generator at once. The walk R <- R + G runs in
// lockstep over all generators so each step needs one field inversion.
std::vector<VeluAccumulator> accumulate_many(const Curve& e, const std::vector<CurvePoint>& gens,
                                             unsigned ell) {
  const FieldPtr& f = e.field();
  const FieldElement b2 = e.b2();
  const FieldElement b4 = e.b4();
  const std::size_t count = gens.size();
  std::vector<VeluAccumulator> acc(count, VeluAccumulator{f->zero(), f->zero()});
  std::vector<CurvePoint> cur = gens;
  std::vector<FieldElement> den(count);
  std::vector<FieldElement> num(count);
  const unsigned half = (ell - 1) / 2;
  for (unsigned k = 1; k <= half; ++k) {
    if (k > 1) {
      for (std::size_t i = 0; i < count; ++i) {
        const CurvePoint& r = cur[i];
        const CurvePoint& g = gens[i];
        if (k == 2) {
          num[i] = r.x().square().scaled(3) + e.a2().scaled(2) * r.x() + e.a4() - e.a1() * r.y();
          den[i] = r.y().scaled(2) + e.a1() * r.x() + e.a3();
        } else {
          num[i] = g.y() - r.y();
          den[i] = g.x() - r.x();
        }
      }
      batch_invert(den);
      for (std::size_t i = 0; i < count; ++i) {
        const CurvePoint& r = cur[i];
        const CurvePoint& g = gens[i];
        const FieldElement lambda = num[i] * den[i];
        FieldElement x3 = lambda.square() + e.a1() * lambda - e.a2() - r.x() - g.x();
        FieldElement y3 = -(lambda + e.a1()) * x3 - (r.y() - lambda * r.x()) - e.a3();
        cur[i] = CurvePoint(std::move(x3), std::move(y3));
      }
    }
    for (std::size_t i = 0; i < count; ++i) add_point(e, b2, b4, cur[i], acc[i]);
  }
  for (auto& a : acc) {
    a.t = a.t.scaled(2);
    a.w = a.w.scaled(2);
  }
  return acc;
}

}  // namespace

VeluAccumulator velu_accumulate(const Curve& e, std::span<const CurvePoint> half) {
  const FieldPtr& f = e.field();
  const FieldElement b2 = e.b2();
  const FieldElement b4 = e.b4();
  VeluAccumulator acc{f->zero(), f->zero()};
  for (const auto& q : half) add_point(e, b2, b4, q, acc);
  acc.t = acc.t.scaled(2);
  acc.w = acc.w.scaled(2);
  return acc;
}

Curve velu_codomain(const Curve& e, const VeluAccumulator& acc) {
  const FieldElement two_inv = e.field()->from_int(2).inverse();
  const FieldElement t = acc.t * two_inv;
  const FieldElement w = acc.w * two_inv;
  return Curve(e.a1(), e.a2(), e.a3(), e.a4() - t.scaled(5), e.a6() - e.b2() * t - w.scaled(7));
}

Isogeny velu_isogeny(const Curve& e, const CurvePoint& g, unsigned ell) {
  if (!e.contains(g)) throw DomainError("point not on curve");
  if (ell < 3 || g.is_infinity() || !e.scalar_mul_unchecked(ell, g).is_infinity())
    throw DomainError("kernel generator order mismatch");
  const auto acc = accumulate_many(e, {g}, ell);
  Curve codomain = velu_codomain(e, acc.front());
  FieldElement j = codomain.j_invariant();
  return Isogeny{std::move(codomain), std::move(j)};
}

std::vector<FieldElement> quotient_j_set(const Curve& e, const TorsionBasis& basis, unsigned ell) {
  const FieldPtr ext = basis.P.x().field();
  const Curve ee = e.base_change(ext);
  std::vector<CurvePoint> gens;
  gens.reserve(ell + 1);
  gens.push_back(basis.Q);
  CurvePoint g = basis.P;
  for (unsigned i = 1; i <= ell; ++i) {
    gens.push_back(g);
    g = ee.add_unchecked(g, basis.Q);
  }
  const auto acc = accumulate_many(ee, gens, ell);
  std::vector<FieldElement> out;
  out.reserve(acc.size());
  for (const auto& a : acc) {
    const FieldElement j = velu_codomain(ee, a).j_invariant();
    auto down = ext->descend(j, e.field());
    if (!down) throw InternalError("descent failure: j-invariant not in the base field");
    out.push_back(std::move(*down));
  }
  return out;
}

}  // namespace modpoly
