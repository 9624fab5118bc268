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

#include "modpoly/classical.hpp"

#include <gtest/gtest.h>

#include "modpoly/errors.hpp"

namespace modpoly {
namespace {

TEST(QExpansion, ArithmeticTracksValuation) {
  const QExpansion a(-1, {1, 2, 3, 4});
  const QExpansion b(2, {5, 6, 7});
  const QExpansion prod = a * b;
  EXPECT_EQ(prod.valuation(), 1);
  EXPECT_EQ(prod.coefficients(), (std::vector<mpz_class>{5, 16, 34}));
  const QExpansion sum = a + b;
  EXPECT_EQ(sum.valuation(), -1);
  EXPECT_EQ(sum.end(), 3);
  EXPECT_EQ(sum.coeff(2), 4 + 5);
  EXPECT_EQ(sum.coeff(-5), 0);
  EXPECT_THROW(sum.coeff(3), DomainError);
  const QExpansion inv = a.inverse();
  EXPECT_EQ(inv.valuation(), 1);
  const QExpansion one = a * inv;
  EXPECT_EQ(one.coefficients(), (std::vector<mpz_class>{1, 0, 0, 0}));
  const QExpansion sub = a.substitute(3);
  EXPECT_EQ(sub.valuation(), -3);
  EXPECT_EQ(sub.coeff(0), 2);
  EXPECT_EQ(sub.coeff(1), 0);
  EXPECT_EQ(sub.coeff(6), 4);
  EXPECT_EQ(a.pow(3).coefficients(), (a * a * a).coefficients());
}

TEST(Classical, JCoefficients) {
  const QExpansion j = j_qexp(30);
  EXPECT_EQ(j.valuation(), -1);
  EXPECT_EQ(j.coeff(-1), 1);
  EXPECT_EQ(j.coeff(0), 744);
  EXPECT_EQ(j.coeff(1), 196884);
  EXPECT_EQ(j.coeff(2), 21493760);
  for (int n = -1; n < j.end(); ++n) EXPECT_GT(j.coeff(n), 0);
}

TEST(Classical, TwoConstructionsOfJAgree) {
  const std::size_t n = 200;
  const QExpansion inv_delta = delta_qexp(n).inverse();
  const QExpansion a = eisenstein_e4(n).pow(3) * inv_delta;
  const QExpansion b = eisenstein_e6(n).pow(2) * inv_delta;
  for (int e = -1; e < a.end(); ++e) {
    const mpz_class expected = b.coeff(e) + (e == 0 ? 1728 : 0);
    ASSERT_EQ(a.coeff(e), expected) << e;
  }
}

TEST(Classical, PowersOfJ) {
  const std::size_t n = 60;
  const QExpansion j = j_qexp(n);
  EXPECT_EQ(jpow_coeffs(1, n).coefficients(), j.coefficients());
  for (unsigned k = 1; k <= 6; ++k) {
    const QExpansion jk = jpow_coeffs(k, n);
    EXPECT_EQ(jk.valuation(), -static_cast<int>(k));
    EXPECT_EQ(jk.coeff(-static_cast<int>(k)), 1);
    EXPECT_EQ((jk * j).coefficients(), jpow_coeffs(k + 1, n).coefficients());
  }
  EXPECT_EQ(jpow_coeffs(2, n).coeff(-1), 1488);
}

TEST(Classical, GrowthReportBounds) {
  const GrowthReport report = growth_report(300, 10);
  EXPECT_EQ(report.excluded, 0u);
  EXPECT_EQ(report.cells.size(), 3000u);
  for (const auto& c : report.cells) {
    EXPECT_LE(c.logcoeff, c.upper);
    if (c.n >= 20 * c.k) EXPECT_GE(c.ratio, 2.0) << c.n << " " << c.k;
  }
  ASSERT_EQ(report.petersson.size(), 300u);
  for (unsigned n = 100; n <= 300; ++n) {
    EXPECT_GE(report.petersson[n - 1], 0.8) << n;
    EXPECT_LE(report.petersson[n - 1], 1.2) << n;
  }
}

TEST(Classical, PhiTwoKnownEntries) {
  const BivariatePoly phi = classical_phi(2);
  EXPECT_EQ(phi.at(2, 2), -1);
  EXPECT_EQ(phi.at(2, 1), 1488);
  EXPECT_EQ(phi.at(1, 2), 1488);
  EXPECT_EQ(phi.at(0, 0), mpz_class("-157464000000000"));
  EXPECT_EQ(phi.shape_violation(), "");
}

// phi(j(q), j(q^l)) with the series known up to q^(top).
QExpansion Substituted(const BivariatePoly& phi, int top) {
  const unsigned l = phi.ell();
  const std::size_t len = static_cast<std::size_t>(top + static_cast<int>((l + 1) * (l + 1)) + 4);
  const QExpansion j = j_qexp(len);
  std::vector<mpz_class> one(len);
  one[0] = 1;
  std::vector<QExpansion> jp{QExpansion(0, one)};
  for (unsigned a = 1; a <= l + 1; ++a) jp.push_back(jp.back() * j);
  QExpansion total(0, std::vector<mpz_class>(len, 0));
  for (std::size_t k = 0; k < phi.size(); ++k)
    for (std::size_t m = 0; m < phi.size(); ++m)
      if (phi.at(k, m) != 0) total = total + (jp[k] * jp[m].substitute(l)).scaled(phi.at(k, m));
  return total;
}

TEST(Classical, PhiVanishesBeyondTheSolvedRange) {
  for (unsigned ell : {2u, 3u, 5u}) {
    const BivariatePoly phi = classical_phi(ell);
    const int low = -static_cast<int>(ell * (ell + 1));
    const int top = low + static_cast<int>(2 * ((ell + 1) * (ell + 1) + 2 * ell + 8));
    const QExpansion s = Substituted(phi, top);
    for (int e = low; e <= top; ++e) ASSERT_EQ(s.coeff(e), 0) << "ell=" << ell << " e=" << e;
  }
}

TEST(Classical, KroneckerCongruence) {
  for (unsigned ell : {2u, 3u, 5u, 7u}) {
    const BivariatePoly phi = classical_phi(ell).reduce(ell);
    // (x^l - y)(x - y^l) = x^(l+1) - x^l y^l - x y + y^(l+1).
    BivariatePoly expected(ell, ell);
    expected.set(ell + 1, 0, 1);
    expected.set(0, ell + 1, 1);
    expected.set(ell, ell, -1);
    expected.set(1, 1, -1);
    EXPECT_EQ(phi, expected) << ell;
  }
}

TEST(Classical, RejectsUnsupportedEll) {
  EXPECT_THROW(classical_phi(4), PreconditionError);
  EXPECT_THROW(classical_phi(17), PreconditionError);
}

}  // namespace
}  // namespace modpoly
