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

#include "modpoly/globalphi.hpp"

#include <algorithm>

#include "modpoly/errors.hpp"
#include "modpoly/polynomial.hpp"
#include "modpoly/ssinit.hpp"

namespace modpoly {

void check_mod_p_inputs(std::uint64_t p, unsigned ell) {
  if (ell < 3 || !is_prime(ell)) throw PreconditionError("ℓ must be an odd prime");
  if (p <= 3 || !is_prime(p)) throw PreconditionError("p must be a prime greater than 3");
  if (p == ell) throw PreconditionError("ℓ and p must be distinct");
  if (supersingular_count(p) < ell + 1) throw PreconditionError("precondition S(p) ≥ ℓ+1 violated");
}

WalkState collect_j_invariants(std::uint64_t p, unsigned ell, const FieldElement& j0, Rng& rng) {
  check_mod_p_inputs(p, ell);
  WalkState walk;
  walk.frontier.push_back(j0);
  auto contains = [](const std::vector<FieldElement>& xs, const FieldElement& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  };
  while (walk.visited.size() < ell + 1) {
    if (walk.frontier.empty()) throw InternalError("frontier exhausted");
    const FieldElement j = walk.frontier.front();
    walk.frontier.erase(walk.frontier.begin());
    LocalPoly local = local_modular_poly(j, ell, rng);
    walk.visited.push_back(j);
    for (const auto& r : local.roots) {
      if (!contains(walk.visited, r) && !contains(walk.frontier, r)) walk.frontier.push_back(r);
    }
    walk.locals.push_back(std::move(local));
  }
  return walk;
}

BivariatePoly interpolate_bivariate(const WalkState& walk, unsigned ell) {
  const std::size_t n = walk.visited.size();
  if (n != ell + 1 || walk.locals.size() != n) throw DomainError("need exactly l+1 interpolation nodes");
  const FieldPtr& f = walk.visited.front().field();

  // Lagrange basis L_i(y) = prod_{k != i} (y - j_k) / (j_i - j_k).
  std::vector<Polynomial> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElement> others;
    FieldElement denom = f->one();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      others.push_back(walk.visited[k]);
      denom *= walk.visited[i] - walk.visited[k];
    }
    basis.push_back(Polynomial::from_roots(f, others).scaled(denom.inverse()));
  }

  const FieldPtr fp = Field::prime(f->characteristic());
  BivariatePoly out(ell, f->characteristic());
  out.set(ell + 1, 0, 1);
  out.set(0, ell + 1, 1);
  for (std::size_t k = 0; k <= ell; ++k) {
    Polynomial pk(f);
    for (std::size_t i = 0; i < n; ++i) {
      FieldElement v = walk.locals[i].coefficients[k];
      if (k == 0) v -= walk.visited[i].pow(static_cast<std::uint64_t>(ell + 1));
      pk = pk + basis[i].scaled(v);
    }
    for (int m = 0; m <= pk.degree(); ++m) {
      auto down = f->descend(pk.coefficient(m), fp);
      if (!down) throw InternalError("descent failure: coefficient not in F_p");
      out.set(k, m, down->value());
    }
  }
  return out;
}

BivariatePoly modular_poly_mod_p(std::uint64_t p, unsigned ell, Rng& rng) {
  check_mod_p_inputs(p, ell);
  const FieldElement j0 = supersingular_j(p, rng);
  return interpolate_bivariate(collect_j_invariants(p, ell, j0, rng), ell);
}

}  // namespace modpoly
