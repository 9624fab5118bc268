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

#include "modpoly/bivariate.hpp"

#include <sstream>

#include "modpoly/errors.hpp"

namespace modpoly {

BivariatePoly::BivariatePoly(unsigned ell, std::uint64_t modulus)
    : ell_(ell), modulus_(modulus), c_(static_cast<std::size_t>(ell + 2) * (ell + 2)) {}

void BivariatePoly::set(std::size_t k, std::size_t m, const mpz_class& v) {
  if (k >= size() || m >= size()) throw DomainError("monomial outside the grid");
  mpz_class& slot = c_[k * size() + m];
  slot = v;
  if (modulus_ != 0) {
    slot %= static_cast<unsigned long>(modulus_);
    if (slot < 0) slot += static_cast<unsigned long>(modulus_);
  }
}

BivariatePoly BivariatePoly::reduce(std::uint64_t p) const {
  BivariatePoly out(ell_, p);
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t m = 0; m < size(); ++m) out.set(k, m, at(k, m));
  return out;
}

bool BivariatePoly::is_symmetric() const {
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t m = k + 1; m < size(); ++m)
      if (at(k, m) != at(m, k)) return false;
  return true;
}

std::string BivariatePoly::shape_violation() const {
  const std::size_t top = ell_ + 1;
  for (std::size_t m = 0; m < size(); ++m) {
    if (at(top, m) != (m == 0 ? 1 : 0)) return "x^(l+1) coefficient is not 1";
  }
  if (at(0, top) != 1) return "p_0 is not monic of degree l+1";
  for (std::size_t k = 1; k < top; ++k) {
    if (at(k, top) != 0) return "p_" + std::to_string(k) + " has degree above l";
  }
  return "";
}

std::string BivariatePoly::to_text() const {
  std::ostringstream out;
  for (std::size_t k = size(); k-- > 0;) {
    for (std::size_t m = size(); m-- > 0;) {
      if (at(k, m) != 0) out << k << ' ' << m << ' ' << at(k, m).get_str() << '\n';
    }
  }
  return out.str();
}

BivariatePoly BivariatePoly::from_text(unsigned ell, std::uint64_t modulus, const std::string& text) {
  BivariatePoly out(ell, modulus);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::size_t k = 0, m = 0;
    std::string c;
    if (!(fields >> k >> m >> c)) throw DomainError("malformed line: " + line);
    mpz_class v;
    if (v.set_str(c, 10) != 0) throw DomainError("malformed coefficient: " + c);
    out.set(k, m, v);
  }
  return out;
}

}  // namespace modpoly
