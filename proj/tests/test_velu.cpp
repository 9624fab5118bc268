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

#include <gtest/gtest.h>

#include <algorithm>

#include "modpoly/errors.hpp"

namespace modpoly {
namespace {

// #E over any small field of a short Weierstrass curve, by summing the
// quadratic character of x^3 + a4 x + a6 over every x.
mpz_class ShortCurveCount(const Curve& e) {
  const FieldPtr& f = e.field();
  const std::size_t width = f->total_degree();
  const std::uint64_t p = f->characteristic();
  std::vector<std::int64_t> flat(width, 0);
  mpz_class count = 1;
  for (;;) {
    const FieldElement x = f->from_flat(flat);
    const FieldElement rhs = x * x * x + e.a4() * x + e.a6();
    count += rhs.is_zero() ? 1 : (is_square(rhs) ? 2 : 0);
    std::size_t i = 0;
    while (i < width && ++flat[i] == static_cast<std::int64_t>(p)) flat[i++] = 0;
    if (i == width) break;
  }
  return count;
}

// A point of exact order l, given l | order = #E.
CurvePoint RationalKernelPoint(const Curve& e, const mpz_class& order, unsigned ell, Rng& rng) {
  mpz_class cofactor = order;
  while (cofactor % ell == 0) cofactor /= ell;
  for (;;) {
    CurvePoint pt = e.scalar_mul(cofactor, random_point(e, rng));
    if (pt.is_infinity()) continue;
    for (CurvePoint next = e.scalar_mul(ell, pt); !next.is_infinity(); next = e.scalar_mul(ell, pt)) pt = next;
    return pt;
  }
}

TEST(Velu, GeneratorIndependence) {
  Rng rng(1);
  auto f = Field::prime(1009);
  for (std::int64_t a = 1; a < 40; ++a) {
    Curve e(f->from_int(1), f->from_int(a), f->zero(), f->from_int(3), f->from_int(a + 5));
    const mpz_class n = brute_force_point_count(e);
    for (unsigned ell : {3u, 5u, 7u}) {
      if (n % ell != 0) continue;
      const CurvePoint g = RationalKernelPoint(e, n, ell, rng);
      const Isogeny base = velu_isogeny(e, g, ell);
      for (unsigned c = 2; c < ell; ++c) {
        const Isogeny other = velu_isogeny(e, e.scalar_mul(c, g), ell);
        EXPECT_EQ(other.codomain, base.codomain);
      }
    }
  }
}

TEST(Velu, PairedSumsMatchFullKernelSums) {
  Rng rng(2);
  auto f = Field::prime(1009);
  int checked = 0;
  for (std::int64_t a = 1; a <= 20; ++a) {
    Curve e(f->from_int(2), f->from_int(5), f->from_int(7), f->from_int(a), f->from_int(11));
    const mpz_class n = brute_force_point_count(e);
    for (unsigned ell : {3u, 5u, 7u, 11u, 13u}) {
      if (n % ell != 0) continue;
      ++checked;
      const CurvePoint g = RationalKernelPoint(e, n, ell, rng);
      std::vector<CurvePoint> half, all;
      CurvePoint cur = g;
      for (unsigned k = 1; k < ell; ++k) {
        if (k <= (ell - 1) / 2) half.push_back(cur);
        all.push_back(cur);
        cur = e.add(cur, g);
      }
      // Direct sums over every nonzero kernel point.
      FieldElement t = f->zero(), w = f->zero();
      for (const auto& q : all) {
        const FieldElement gx = q.x() * q.x() * f->from_int(3) + e.a2().scaled(2) * q.x() + e.a4() - e.a1() * q.y();
        const FieldElement gy = -q.y().scaled(2) - e.a1() * q.x() - e.a3();
        const FieldElement tq = gx.scaled(2) - e.a1() * gy;
        t += tq;
        w += gy * gy + q.x() * tq;
      }
      const VeluAccumulator acc = velu_accumulate(e, half);
      EXPECT_EQ(acc.t, t);
      EXPECT_EQ(acc.w, w);
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(Velu, EmptyKernelIsIdentity) {
  auto f = Field::quadratic(31);
  Curve e(f->from_int(1), f->generator(), f->from_int(4), f->from_int(3), f->from_int(9));
  EXPECT_EQ(velu_codomain(e, velu_accumulate(e, {})), e);
}

TEST(Velu, PreservesPointCount) {
  Rng rng(3);
  int checked = 0;
  for (std::uint64_t p : {101, 211, 499}) {
    auto f = Field::prime(p);
    for (std::int64_t a = 1; a < 30; ++a) {
      Curve e(f->from_int(a % 3), f->from_int(a), f->from_int(1), f->from_int(2 * a + 1), f->from_int(a * a + 3));
      const mpz_class n = brute_force_point_count(e);
      for (unsigned ell : {3u, 5u, 7u}) {
        if (n % ell != 0) continue;
        const CurvePoint g = RationalKernelPoint(e, n, ell, rng);
        EXPECT_EQ(brute_force_point_count(velu_isogeny(e, g, ell).codomain), n);
        ++checked;
      }
    }
  }
  auto f = Field::quadratic(23);
  for (std::int64_t a = 1; a < 12; ++a) {
    Curve e = Curve::short_weierstrass(f->generator() + f->from_int(a), f->from_int(a));
    const mpz_class n = brute_force_point_count(e);
    for (unsigned ell : {3u, 5u}) {
      if (n % ell != 0) continue;
      const CurvePoint g = RationalKernelPoint(e, n, ell, rng);
      EXPECT_EQ(brute_force_point_count(velu_isogeny(e, g, ell).codomain), n);
      ++checked;
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Velu, X3PlusXOverF7QuotientsShareCount) {
  Rng rng(4);
  auto f = Field::prime(7);
  Curve e = Curve::short_weierstrass(f->one(), f->zero());
  TorsionBasis b = torsion_basis(e, 3, TraceData{7, 0}, rng);
  const Curve ee = e.base_change(b.P.x().field());
  ASSERT_EQ(ShortCurveCount(ee), 2304);
  CurvePoint g = b.P;
  std::vector<CurvePoint> gens{b.Q};
  for (unsigned i = 0; i < 3; ++i) {
    gens.push_back(g);
    g = ee.add(g, b.Q);
  }
  for (const auto& gen : gens) {
    const Curve quotient = velu_isogeny(ee, gen, 3).codomain;
    ASSERT_TRUE(quotient.is_short());
    EXPECT_EQ(ShortCurveCount(quotient), 2304);
  }
}

TEST(Velu, OrderMismatch) {
  Rng rng(5);
  auto f = Field::prime(7);
  Curve e = Curve::short_weierstrass(f->one(), f->zero());
  TorsionBasis b = torsion_basis(e, 3, TraceData{7, 0}, rng);
  const Curve ee = e.base_change(b.P.x().field());
  try {
    velu_isogeny(ee, b.P, 5);
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_NE(std::string(err.what()).find("kernel generator order mismatch"), std::string::npos);
  }
  EXPECT_THROW(velu_isogeny(ee, CurvePoint::infinity(), 3), DomainError);
}

TEST(Velu, QuotientSetShapeAndSubfield) {
  Rng rng(6);
  auto f = Field::quadratic(13);
  Curve e = curve_from_j(f->from_int(5));
  const TraceData tr = supersingular_trace(e, rng);
  for (unsigned ell : {3u, 5u, 7u}) {
    TorsionBasis b = torsion_basis(e, ell, tr, rng);
    const Curve ee = e.base_change(b.P.x().field());
    auto js = quotient_j_set(e, b, ell);
    ASSERT_EQ(js.size(), ell + 1);
    // Subgroups are pairwise distinct.
    std::vector<CurvePoint> gens{b.Q};
    CurvePoint g = b.P;
    for (unsigned i = 0; i < ell; ++i) {
      gens.push_back(g);
      g = ee.add(g, b.Q);
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t k = i + 1; k < gens.size(); ++k) EXPECT_FALSE(bsgs_member(ee, gens[i], gens[k], ell));
    // The raw j-invariants over the extension are fixed by x -> x^(p^2).
    for (const auto& gen : gens) {
      const FieldElement j = velu_isogeny(ee, gen, ell).j;
      EXPECT_EQ(j.pow(mpz_class(169)), j);
    }
    // S(13) = 1, so every neighbour of 5 is 5.
    for (const auto& j : js) EXPECT_EQ(j, f->from_int(5));
  }
}

TEST(Velu, QuotientMultisetIndependentOfBasis) {
  // 83 = 11 mod 12: both j = 0 and j = 1728 are supersingular.
  auto f = Field::quadratic(83);
  Rng rng(7);
  for (const Curve& c : {curve_from_j(f->from_int(1728)), curve_from_j(f->zero())}) {
    const TraceData tr = supersingular_trace(c, rng);
    for (unsigned ell : {3u, 5u}) {
      Rng r1(100), r2(200);
      auto a = quotient_j_set(c, torsion_basis(c, ell, tr, r1), ell);
      auto b = quotient_j_set(c, torsion_basis(c, ell, tr, r2), ell);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b);
    }
  }
}

}  // namespace
}  // namespace modpoly
