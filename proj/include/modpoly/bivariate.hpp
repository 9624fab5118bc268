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

#ifndef MODPOLY_BIVARIATE_HPP_
#define MODPOLY_BIVARIATE_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace modpoly {

// sum c[k][m] x^k y^m with 0 <= k, m <= l+1, over F_p (modulus = p, entries
// in [0, p)) or over the integers (modulus = 0).
class BivariatePoly {
 public:
  BivariatePoly(unsigned ell, std::uint64_t modulus);

  unsigned ell() const { return ell_; }
  std::uint64_t modulus() const { return modulus_; }
  std::size_t size() const { return ell_ + 2; }

  const mpz_class& at(std::size_t k, std::size_t m) const { return c_[k * size() + m]; }
  // Stores v, reduced into [0, p) for a modular grid.
  void set(std::size_t k, std::size_t m, const mpz_class& v);

  BivariatePoly reduce(std::uint64_t p) const;
  bool is_symmetric() const;
  // Empty when the grid is monic of x-degree l+1, c[0][.] is monic of
  // y-degree l+1 and the other columns have y-degree <= l; otherwise a
  // description of the first violation.
  std::string shape_violation() const;

  // One "k m c" line per nonzero coefficient, (k, m) descending.
  std::string to_text() const;
  // Inverse of to_text(); throws DomainError on malformed input.
  static BivariatePoly from_text(unsigned ell, std::uint64_t modulus, const std::string& text);

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.ell_ == b.ell_ && a.modulus_ == b.modulus_ && a.c_ == b.c_;
  }

 private:
  unsigned ell_;
  std::uint64_t modulus_;
  std::vector<mpz_class> c_;
};

}  // namespace modpoly

#endif  // MODPOLY_BIVARIATE_HPP_
