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

#include <gtest/gtest.h>

#include <set>

#include "modpoly/errors.hpp"

namespace modpoly {
namespace {

// All affine points of e over F_p by direct enumeration.
std::vector<CurvePoint> EnumeratePrimeField(const Curve& e) {
  const FieldPtr& f = e.field();
  std::vector<CurvePoint> pts;
  for (std::uint64_t x = 0; x < f->characteristic(); ++x) {
    for (std::uint64_t y = 0; y < f->characteristic(); ++y) {
      CurvePoint pt(f->from_int(static_cast<std::int64_t>(x)), f->from_int(static_cast<std::int64_t>(y)));
      if (e.contains(pt)) pts.push_back(pt);
    }
  }
  return pts;
}

Curve RandomLongCurve(const FieldPtr& f, Rng& rng) {
  for (;;) {
    try {
      return Curve(f->random(rng), f->random(rng), f->random(rng), f->random(rng), f->random(rng));
    } catch (const DomainError&) {
    }
  }
}

TEST(Curves, ZeroMultipleAndNegation) {
  Rng rng(1);
  auto f = Field::quadratic(19);
  Curve e = RandomLongCurve(f, rng);
  CurvePoint a = random_point(e, rng);
  EXPECT_TRUE(e.scalar_mul(0, a).is_infinity());
  EXPECT_TRUE(e.add(a, e.negate(a)).is_infinity());
  EXPECT_EQ(e.scalar_mul(1, a), a);
  EXPECT_EQ(e.scalar_mul(-1, a), e.negate(a));
}

TEST(Curves, GroupOrderOfX3PlusXOverF7) {
  auto f7 = Field::prime(7);
  Curve e = Curve::short_weierstrass(f7->one(), f7->zero());
  auto pts = EnumeratePrimeField(e);
  EXPECT_EQ(pts.size() + 1, 8u);
  EXPECT_EQ(brute_force_point_count(e), 8);
  for (const auto& pt : pts) EXPECT_TRUE(e.scalar_mul(8, pt).is_infinity());
}

TEST(Curves, RandomPointXCoordinates) {
  auto f7 = Field::prime(7);
  Curve e = Curve::short_weierstrass(f7->one(), f7->zero());
  std::set<std::uint64_t> liftable;
  for (std::uint64_t x = 0; x < 7; ++x) {
    const std::uint64_t rhs = (x * x * x + x) % 7;
    for (std::uint64_t y = 0; y < 7; ++y)
      if (y * y % 7 == rhs) liftable.insert(x);
  }
  EXPECT_EQ(liftable, (std::set<std::uint64_t>{0, 1, 3, 5}));
  Rng rng(2);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 200; ++i) {
    CurvePoint pt = random_point(e, rng);
    ASSERT_FALSE(pt.is_infinity());
    ASSERT_TRUE(e.contains(pt));
    seen.insert(pt.x().value());
  }
  EXPECT_EQ(seen, liftable);
}

TEST(Curves, RandomPointIsReproducible) {
  auto f = Field::quadratic(101);
  Curve e = curve_from_j(f->from_int(17));
  Rng a(99), b(99);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(random_point(e, a), random_point(e, b));
}

TEST(Curves, JInvariants) {
  auto f = Field::quadratic(103);
  EXPECT_TRUE(Curve::short_weierstrass(f->zero(), f->one()).j_invariant().is_zero());
  EXPECT_EQ(Curve::short_weierstrass(f->one(), f->zero()).j_invariant(), f->from_int(1728));
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    FieldElement j = f->random(rng);
    EXPECT_EQ(curve_from_j(j).j_invariant(), j);
  }
}

TEST(Curves, SingularAndOffCurveInputsThrow) {
  auto f = Field::prime(11);
  EXPECT_THROW(Curve::short_weierstrass(f->zero(), f->zero()), DomainError);
  Curve e = Curve::short_weierstrass(f->one(), f->one());
  CurvePoint bogus(f->from_int(1), f->from_int(1));
  ASSERT_FALSE(e.contains(bogus));
  try {
    (void)e.add(bogus, CurvePoint::infinity());
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_NE(std::string(err.what()).find("point not on curve"), std::string::npos);
  }
  EXPECT_THROW(e.scalar_mul(3, bogus), DomainError);
}

TEST(Curves, GroupLawProperties) {
  Rng rng(4);
  auto base = Field::quadratic(29);
  auto ext = make_extension(base, 3, rng);
  std::vector<Curve> curves{RandomLongCurve(ext, rng), curve_from_j(ext->random(rng))};
  for (const auto& e : curves) {
    for (int i = 0; i < 20; ++i) {
      CurvePoint a = random_point(e, rng), b = random_point(e, rng), c = random_point(e, rng);
      EXPECT_EQ(e.add(a, b), e.add(b, a));
      EXPECT_EQ(e.add(e.add(a, b), c), e.add(a, e.add(b, c)));
      const long m = static_cast<long>(uniform_below(rng, 500));
      const long n = static_cast<long>(uniform_below(rng, 500));
      EXPECT_EQ(e.scalar_mul(m + n, a), e.add(e.scalar_mul(m, a), e.scalar_mul(n, a)));
    }
    // Scalar multiplication agrees with repeated addition, including doublings.
    CurvePoint a = random_point(e, rng);
    CurvePoint acc = CurvePoint::infinity();
    for (int k = 0; k < 30; ++k) {
      EXPECT_EQ(e.scalar_mul(k, a), acc);
      acc = e.add(acc, a);
    }
  }
}

TEST(Curves, SupersingularTraceOfX3PlusX) {
  // y^2 = x^3 + x has a_7 = 0 over F_7, so over F_49: t_2 = 0^2 - 2*7 = -14.
  Rng rng(5);
  auto f = Field::quadratic(7);
  Curve e = Curve::short_weierstrass(f->one(), f->zero());
  TraceData t = supersingular_trace(e, rng);
  EXPECT_EQ(t.q, 49);
  EXPECT_EQ(t.trace, -14);
  EXPECT_EQ(brute_force_point_count(e), 49 + 1 + 14);
}

TEST(Curves, TraceIsFromSupersingularSet) {
  Rng rng(6);
  for (std::uint64_t p : {11, 17, 23, 29, 41}) {
    auto f = Field::quadratic(p);
    const std::int64_t sp = static_cast<std::int64_t>(p);
    // j = 0 (p = 2 mod 3) and j = 1728 (p = 3 mod 4) twists.
    for (std::int64_t k = 1; k <= 6; ++k) {
      FieldElement b = f->generator() + f->from_int(k);
      std::vector<Curve> curves;
      if (p % 3 == 2) curves.push_back(Curve::short_weierstrass(f->zero(), b));
      if (p % 4 == 3) curves.push_back(Curve::short_weierstrass(b, f->zero()));
      for (const auto& e : curves) {
        TraceData t = supersingular_trace(e, rng);
        EXPECT_TRUE(t.trace == 0 || t.trace == sp || t.trace == -sp || t.trace == 2 * sp ||
                    t.trace == -2 * sp);
        EXPECT_EQ(brute_force_point_count(e), t.q + 1 - t.trace);
        const mpz_class order = point_count_ext(t.q, t.trace, 1);
        for (int i = 0; i < 20; ++i) EXPECT_TRUE(e.scalar_mul(order, random_point(e, rng)).is_infinity());
      }
    }
  }
}

TEST(Curves, OrdinaryCurveTraceFails) {
  Rng rng(7);
  auto f = Field::quadratic(13);
  Curve e = Curve::short_weierstrass(f->one(), f->one());
  const mpz_class n = brute_force_point_count(e);
  for (long a : {0L, 13L, -13L, 26L, -26L}) EXPECT_NE(n, 169 + 1 - a);
  EXPECT_THROW(supersingular_trace(e, rng), PreconditionError);
}

TEST(Curves, PointCountExtension) {
  EXPECT_EQ(point_count_ext(7, 3, 1), 7 + 1 - 3);
  EXPECT_EQ(point_count_ext(7, 0, 4), 2304);
  EXPECT_EQ(point_count_ext(7, 0, 2), 64);
  EXPECT_EQ(point_count_ext(7, 0, 2) % 8, 0);
  auto f = Field::quadratic(7);
  EXPECT_EQ(brute_force_point_count(Curve::short_weierstrass(f->one(), f->zero())), 64);
  EXPECT_THROW(point_count_ext(7, 6, 1), DomainError);
}

TEST(Curves, PointCountAnnihilatesEnumeratedPoints) {
  for (std::uint64_t p : {101, 211, 307}) {
    auto f = Field::prime(p);
    Curve e = Curve::short_weierstrass(f->from_int(3), f->from_int(5));
    auto pts = EnumeratePrimeField(e);
    const std::int64_t trace = static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(pts.size() + 1);
    const mpz_class s = point_count_ext(static_cast<long>(p), trace, 1);
    for (const auto& pt : pts) ASSERT_TRUE(e.scalar_mul(s, pt).is_infinity());
  }
}

TEST(Curves, PointCountDivisibility) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const long q = 3 + static_cast<long>(uniform_below(rng, 10000));
    long bound = 0;
    while ((bound + 1) * (bound + 1) <= 4 * q) ++bound;
    const long a = static_cast<long>(uniform_below(rng, 2 * bound + 1)) - bound;
    const unsigned m = 1 + static_cast<unsigned>(uniform_below(rng, 6));
    const unsigned k = 1 + static_cast<unsigned>(uniform_below(rng, 4));
    const mpz_class small = point_count_ext(q, a, m);
    const mpz_class big = point_count_ext(q, a, m * k);
    ASSERT_EQ(big % small, 0) << q << " " << a << " " << m << " " << k;
  }
}

}  // namespace
}  // namespace modpoly
