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

#include <gtest/gtest.h>

#include <set>

#include "modpoly/errors.hpp"

namespace modpoly {
namespace {

// Reference product in base[T]/(f): schoolbook multiply using base-level
// arithmetic only, then long division by the monic modulus.
FieldElement ReferenceMul(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = a.field();
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  const auto mod = f->modulus();
  const std::size_t m = f->degree();
  std::vector<FieldElement> prod(2 * m - 1, f->base()->zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] += ca[i] * cb[j];
  for (std::size_t k = 2 * m - 1; k-- > m;) {
    const FieldElement c = prod[k];
    for (std::size_t t = 0; t <= m; ++t) prod[k - m + t] -= c * mod[t];
  }
  prod.resize(m);
  return f->from_coefficients(prod);
}

TEST(Fields, PrimeInverseMatchesBruteForce) {
  auto f7 = Field::prime(7);
  std::uint64_t brute = 0;
  for (std::uint64_t k = 1; k < 7; ++k) {
    if (3 * k % 7 == 1) brute = k;
  }
  EXPECT_EQ(brute, 5u);
  EXPECT_EQ(f7->from_int(3).inverse(), f7->from_int(brute));
}

TEST(Fields, IdentitiesAndInverses) {
  Rng rng(1);
  auto f = Field::quadratic(101);
  for (int i = 0; i < 200; ++i) {
    FieldElement a = f->random(rng);
    EXPECT_EQ(a + f->zero(), a);
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(Fields, DivisionByZeroAndMismatchThrow) {
  auto f = Field::prime(11);
  auto g = Field::prime(13);
  EXPECT_THROW(f->zero().inverse(), DomainError);
  try {
    (void)(f->one() / f->zero());
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("division by zero"), std::string::npos);
  }
  try {
    (void)(f->one() + g->one());
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("field mismatch"), std::string::npos);
  }
}

TEST(Fields, RejectsBadCharacteristic) {
  EXPECT_THROW(Field::prime(9), DomainError);
  EXPECT_THROW(Field::prime(2), DomainError);
  EXPECT_THROW(Field::prime(Field::kMaxCharacteristic + 11), DomainError);
}

TEST(Fields, MakeExtensionDegreeOneIsBase) {
  Rng rng(2);
  auto f = Field::quadratic(13);
  EXPECT_EQ(make_extension(f, 1, rng).get(), f.get());
}

TEST(Fields, QuadraticOverF3HasNoRoots) {
  Rng rng(3);
  auto f3 = Field::prime(3);
  auto ext = make_extension(f3, 2, rng);
  auto mod = ext->modulus();
  ASSERT_EQ(mod.size(), 3u);
  EXPECT_TRUE(mod[2].is_one());
  for (int x = 0; x < 3; ++x) {
    FieldElement v = f3->zero();
    FieldElement xp = f3->one();
    for (const auto& c : mod) {
      v += c * xp;
      xp *= f3->from_int(x);
    }
    EXPECT_FALSE(v.is_zero()) << "root " << x;
  }
}

TEST(Fields, TotalDegreeBookkeeping) {
  Rng rng(4);
  auto q = Field::quadratic(31);
  auto ext = make_extension(q, 6 * (5 - 1), rng);
  EXPECT_EQ(ext->degree(), 24u);
  EXPECT_EQ(ext->total_degree(), 48u);
  EXPECT_EQ(ext->order(), [] {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 31, 48);
    return r;
  }());
}

TEST(Fields, ExtensionModuliHaveNoRootsInBase) {
  Rng rng(5);
  for (std::uint64_t p : {5, 7, 13}) {
    auto q = Field::quadratic(p);
    for (std::size_t m : {2, 3, 4, 6}) {
      auto ext = make_extension(q, m, rng);
      auto mod = ext->modulus();
      // Exhaust F_{p^2}.
      for (std::uint64_t a = 0; a < p; ++a) {
        for (std::uint64_t b = 0; b < p; ++b) {
          std::vector<std::int64_t> flat{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
          FieldElement x = q->from_flat(flat);
          FieldElement v = q->zero();
          for (std::size_t i = mod.size(); i-- > 0;) v = v * x + mod[i];
          ASSERT_FALSE(v.is_zero()) << "p=" << p << " m=" << m;
        }
      }
    }
  }
}

TEST(Fields, RejectsReducibleModulus) {
  auto f7 = Field::prime(7);
  // (T - 1)(T - 2) = T^2 - 3T + 2.
  std::vector<FieldElement> mod{f7->from_int(2), f7->from_int(-3), f7->one()};
  EXPECT_THROW(Field::extension(f7, mod), DomainError);
  std::vector<FieldElement> irr{f7->from_int(1), f7->zero(), f7->one()};  // T^2 + 1, 7 = 3 mod 4
  EXPECT_NO_THROW(Field::extension(f7, irr));
}

TEST(Fields, ExtensionProductMatchesReference) {
  Rng rng(6);
  // 2^31 - 1 forces the 128-bit accumulator path; 1009 the 64-bit path.
  for (std::uint64_t p : {1009ULL, 2147483647ULL}) {
    std::vector<FieldPtr> fields{make_extension(Field::prime(p), 5, rng),
                                 make_extension(Field::quadratic(p), 7, rng)};
    for (const auto& f : fields) {
      for (int i = 0; i < 20; ++i) {
        FieldElement a = f->random(rng), b = f->random(rng);
        ASSERT_EQ(a * b, ReferenceMul(a, b)) << f->describe();
      }
      FieldElement a = f->random(rng);
      EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Fields, SqrtSmallCases) {
  auto f7 = Field::prime(7);
  EXPECT_TRUE(sqrt(f7->zero())->is_zero());
  auto r = sqrt(f7->from_int(4));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(*r == f7->from_int(2) || *r == f7->from_int(5));
  std::set<std::uint64_t> squares;
  for (std::uint64_t x = 0; x < 7; ++x) squares.insert(x * x % 7);
  EXPECT_EQ(squares.count(3), 0u);
  EXPECT_FALSE(sqrt(f7->from_int(3)).has_value());
}

TEST(Fields, SqrtOfRandomSquares) {
  Rng rng(7);
  std::vector<FieldPtr> fields{Field::prime(97), Field::prime(113), Field::quadratic(97),
                               Field::quadratic(41)};
  fields.push_back(make_extension(Field::quadratic(13), 6, rng));
  fields.push_back(make_extension(Field::prime(17), 4, rng));
  for (const auto& f : fields) {
    for (int i = 0; i < 1000; ++i) {
      FieldElement a = f->random(rng);
      FieldElement sq = a * a;
      auto r = sqrt(sq);
      ASSERT_TRUE(r.has_value()) << f->describe();
      ASSERT_EQ(*r * *r, sq) << f->describe();
    }
  }
}

TEST(Fields, SqrtDetectsNonSquares) {
  Rng rng(8);
  auto f = make_extension(Field::quadratic(11), 3, rng);
  int non_squares = 0;
  for (int i = 0; i < 200; ++i) {
    FieldElement a = f->random(rng);
    auto r = sqrt(a);
    EXPECT_EQ(r.has_value(), is_square(a));
    if (!r) ++non_squares;
  }
  EXPECT_GT(non_squares, 50);
}

TEST(Fields, QuadraticCharacter) {
  EXPECT_EQ(quadratic_character(1, 13), 1);
  EXPECT_EQ(quadratic_character(26, 13), 0);
  std::set<std::uint64_t> squares13;
  for (std::uint64_t x = 1; x < 13; ++x) squares13.insert(x * x % 13);
  EXPECT_EQ(squares13, (std::set<std::uint64_t>{1, 3, 4, 9, 10, 12}));
  EXPECT_EQ(quadratic_character(2, 13), -1);
  EXPECT_EQ(quadratic_character(-1, 13), 1);
}

TEST(Fields, QuadraticCharacterAgreesWithSqrt) {
  for (std::uint64_t p = 3; p < 100; ++p) {
    if (!is_prime(p)) continue;
    auto f = Field::prime(p);
    for (std::int64_t d = 1; d < static_cast<std::int64_t>(p); ++d) {
      EXPECT_EQ(quadratic_character(d, p) == 1, sqrt(f->from_int(d)).has_value()) << p << " " << d;
    }
  }
}

TEST(Fields, FrobeniusP2) {
  Rng rng(9);
  auto f9 = Field::quadratic(3);
  FieldElement i = f9->generator();
  EXPECT_TRUE((i * i + f9->one()).is_zero());
  EXPECT_EQ(frobenius_p2(i), -i);
  EXPECT_EQ(i.pow(3ULL), -i);

  auto f = Field::quadratic(43);
  for (int k = 0; k < 100; ++k) {
    FieldElement a = f->random(rng), b = f->random(rng);
    EXPECT_EQ(frobenius_p2(a), a.pow(43ULL));
    EXPECT_EQ(frobenius_p2(frobenius_p2(a)), a);
    EXPECT_EQ(frobenius_p2(a + b), frobenius_p2(a) + frobenius_p2(b));
    EXPECT_EQ(frobenius_p2(a * b), frobenius_p2(a) * frobenius_p2(b));
    FieldElement c = f->from_int(static_cast<std::int64_t>(k));
    EXPECT_EQ(frobenius_p2(c), c);
  }
}

TEST(Fields, EmbedDescendAndSerialization) {
  Rng rng(10);
  auto q = Field::quadratic(13);
  auto ext = make_extension(q, 4, rng);
  FieldElement a = q->from_flat(std::vector<std::int64_t>{3, 11});
  FieldElement up = ext->embed(a);
  EXPECT_EQ(up.to_string().substr(0, 4), "3,11");
  auto down = ext->descend(up, q);
  ASSERT_TRUE(down.has_value());
  EXPECT_EQ(*down, a);
  EXPECT_FALSE(ext->descend(ext->generator(), q).has_value());
  EXPECT_EQ(q->parse("3,11"), a);
  EXPECT_EQ(q->parse("-10"), q->from_int(3));
  EXPECT_THROW(q->parse("1,2,3"), DomainError);
  FieldElement r = ext->random(rng);
  EXPECT_EQ(ext->parse(r.to_string()), r);
}

}  // namespace
}  // namespace modpoly
