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

#include <gmp.h>

#include <cmath>
#include <string>
#include <utility>

#include "modpoly/errors.hpp"
#include "modpoly/fields.hpp"

namespace modpoly {
namespace {

// ln |z| for z != 0.
double log_abs(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

std::vector<std::uint64_t> divisor_power_sums(std::size_t n, unsigned power) {
  std::vector<std::uint64_t> s(n + 1, 0);
  for (std::uint64_t d = 1; d <= n; ++d) {
    std::uint64_t dp = 1;
    for (unsigned i = 0; i < power; ++i) dp *= d;
    for (std::uint64_t m = d; m <= n; m += d) s[m] += dp;
  }
  return s;
}

QExpansion eisenstein(std::size_t n, unsigned power, long scale) {
  const auto sigma = divisor_power_sums(n, power);
  std::vector<mpz_class> c(n);
  if (n > 0) c[0] = 1;
  for (std::size_t i = 1; i < n; ++i) c[i] = mpz_class(static_cast<unsigned long>(sigma[i])) * scale;
  return QExpansion(0, std::move(c));
}

// Reduced row echelon solve of A x = b over Q. Returns false when A has
// rank below its column count. Throws InternalError if the system is
// inconsistent.
bool solve_exact(std::vector<std::vector<mpq_class>> rows, std::size_t cols, std::vector<mpq_class>& x) {
  std::size_t r = 0;
  std::vector<std::size_t> pivot_row(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c] != 0) {
        best = i;
        break;
      }
    }
    if (best == rows.size()) return false;
    std::swap(rows[r], rows[best]);
    const mpq_class inv = 1 / rows[r][c];
    for (std::size_t k = c; k <= cols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const mpq_class factor = rows[i][c];
      for (std::size_t k = c; k <= cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    pivot_row[c] = r++;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i][cols] != 0) throw InternalError("inconsistent modular equation system");
  }
  x.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = rows[pivot_row[c]][cols];
  return true;
}

}  // namespace

QExpansion::QExpansion(int valuation, std::vector<mpz_class> coeffs) : v_(valuation), c_(std::move(coeffs)) {}

const mpz_class& QExpansion::coeff(int e) const {
  static const mpz_class kZero = 0;
  if (e < v_) return kZero;
  if (e >= end()) throw DomainError("coefficient beyond truncation: q^" + std::to_string(e));
  return c_[static_cast<std::size_t>(e - v_)];
}

QExpansion QExpansion::operator+(const QExpansion& b) const {
  const int v = std::min(v_, b.v_);
  const int e = std::min(end(), b.end());
  std::vector<mpz_class> c(e > v ? static_cast<std::size_t>(e - v) : 0);
  for (int i = v; i < e; ++i) c[static_cast<std::size_t>(i - v)] = coeff(i) + b.coeff(i);
  return QExpansion(v, std::move(c));
}

QExpansion QExpansion::operator-(const QExpansion& b) const { return *this + b.scaled(-1); }

QExpansion QExpansion::operator*(const QExpansion& b) const {
  const std::size_t n = std::min(length(), b.length());
  std::vector<mpz_class> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t k = 0; i + k < n; ++k) mpz_addmul(c[i + k].get_mpz_t(), c_[i].get_mpz_t(), b.c_[k].get_mpz_t());
  }
  return QExpansion(v_ + b.v_, std::move(c));
}

QExpansion QExpansion::scaled(const mpz_class& k) const {
  std::vector<mpz_class> c(c_);
  for (auto& x : c) x *= k;
  return QExpansion(v_, std::move(c));
}

QExpansion QExpansion::pow(unsigned k) const {
  std::vector<mpz_class> one(length());
  if (!one.empty()) one[0] = 1;
  QExpansion result(0, std::move(one));
  QExpansion base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

QExpansion QExpansion::inverse() const {
  if (c_.empty() || (c_[0] != 1 && c_[0] != -1)) throw DomainError("series is not a unit");
  const mpz_class& u = c_[0];
  std::vector<mpz_class> b(length());
  b[0] = u;
  for (std::size_t i = 1; i < b.size(); ++i) {
    mpz_class acc = 0;
    for (std::size_t t = 1; t <= i; ++t) mpz_addmul(acc.get_mpz_t(), c_[t].get_mpz_t(), b[i - t].get_mpz_t());
    b[i] = -u * acc;
  }
  return QExpansion(-v_, std::move(b));
}

QExpansion QExpansion::substitute(unsigned m) const {
  std::vector<mpz_class> c(length() * m);
  for (std::size_t i = 0; i < length(); ++i) c[i * m] = c_[i];
  return QExpansion(v_ * static_cast<int>(m), std::move(c));
}

QExpansion QExpansion::truncated(std::size_t n) const {
  std::vector<mpz_class> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(n, length())));
  return QExpansion(v_, std::move(c));
}

QExpansion eisenstein_e4(std::size_t n) { return eisenstein(n, 3, 240); }
QExpansion eisenstein_e6(std::size_t n) { return eisenstein(n, 5, -504); }

QExpansion delta_qexp(std::size_t n) {
  // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
  std::vector<mpz_class> eta(n);
  if (n > 0) eta[0] = 1;
  for (std::size_t k = 1;; ++k) {
    const std::size_t e1 = k * (3 * k - 1) / 2;
    if (e1 >= n) break;
    const int sign = (k % 2 == 1) ? -1 : 1;
    eta[e1] += sign;
    const std::size_t e2 = k * (3 * k + 1) / 2;
    if (e2 < n) eta[e2] += sign;
  }
  const QExpansion p24 = QExpansion(0, std::move(eta)).pow(24);
  return QExpansion(1, p24.coefficients());
}

QExpansion j_qexp(std::size_t n) {
  if (n < 2) throw DomainError("j_qexp needs at least two coefficients");
  return eisenstein_e4(n).pow(3) * delta_qexp(n).inverse();
}

QExpansion jpow_coeffs(unsigned k, std::size_t n) {
  if (k == 0) throw DomainError("jpow_coeffs needs k >= 1");
  return j_qexp(n).pow(k);
}

GrowthReport growth_report(unsigned nmax, unsigned kmax) {
  GrowthReport report;
  const QExpansion j = j_qexp(nmax + kmax + 1);
  QExpansion jk = j;
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) jk = jk * j;
    for (unsigned n = 1; n <= nmax; ++n) {
      const mpz_class& c = jk.coeff(static_cast<int>(n));
      if (c <= 0) {
        ++report.excluded;
        continue;
      }
      GrowthCell cell{n, k, log_abs(c), 4 * M_PI * std::sqrt(static_cast<double>((n + k) * k)), 0};
      cell.ratio = cell.logcoeff / std::sqrt(static_cast<double>(n) * k);
      if (cell.logcoeff > cell.upper) {
        throw InternalError("growth bound violated at n=" + std::to_string(n) + ", k=" + std::to_string(k));
      }
      report.cells.push_back(cell);
      if (k == 1) {
        const double dn = n;
        report.petersson.push_back(
            std::exp(cell.logcoeff + 0.5 * std::log(2.0) + 0.75 * std::log(dn) - 4 * M_PI * std::sqrt(dn)));
      }
    }
  }
  return report;
}

BivariatePoly classical_phi(unsigned ell) {
  if (ell > 13 || !is_prime(ell)) throw PreconditionError("classical_phi supports primes ℓ ≤ 13");
  const int l = static_cast<int>(ell);
  const int low = -l * (l + 1);
  std::vector<std::pair<unsigned, unsigned>> unknowns;
  for (unsigned k = 0; k <= ell; ++k)
    for (unsigned m = k; m <= ell; ++m) unknowns.emplace_back(k, m);

  std::size_t rows_wanted = static_cast<std::size_t>((l + 1) * (l + 1) + 2 * l + 8);
  for (int attempt = 0; attempt <= 3; ++attempt, rows_wanted += 2 * ell + 2) {
    const int high = low + static_cast<int>(rows_wanted) - 1;
    // j^a must be known up to q^(high + l^2) for the x^a y^m products.
    const std::size_t jlen = static_cast<std::size_t>(high + l * l + 2 * l + 4);
    const QExpansion j = j_qexp(jlen);
    std::vector<mpz_class> one(jlen);
    one[0] = 1;
    std::vector<QExpansion> jp{QExpansion(0, std::move(one))};
    for (unsigned a = 1; a <= ell + 1; ++a) jp.push_back(jp.back() * j);
    std::vector<QExpansion> jl;
    for (const auto& s : jp) jl.push_back(s.substitute(ell));

    std::vector<std::vector<mpq_class>> rows(rows_wanted, std::vector<mpq_class>(unknowns.size() + 1));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const auto [k, m] = unknowns[u];
      QExpansion term = jp[k] * jl[m];
      if (k != m) term = term + jp[m] * jl[k];
      for (std::size_t r = 0; r < rows_wanted; ++r) rows[r][u] = term.coeff(low + static_cast<int>(r));
    }
    const QExpansion known = jp[ell + 1] + jl[ell + 1];
    for (std::size_t r = 0; r < rows_wanted; ++r) rows[r][unknowns.size()] = -known.coeff(low + static_cast<int>(r));

    std::vector<mpq_class> x;
    if (!solve_exact(std::move(rows), unknowns.size(), x)) continue;
    BivariatePoly out(ell, 0);
    out.set(ell + 1, 0, 1);
    out.set(0, ell + 1, 1);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      if (x[u].get_den() != 1) throw InternalError("non-integral modular polynomial coefficient");
      out.set(unknowns[u].first, unknowns[u].second, x[u].get_num());
      out.set(unknowns[u].second, unknowns[u].first, x[u].get_num());
    }
    return out;
  }
  throw InternalError("insufficient truncation");
}

}  // namespace modpoly
