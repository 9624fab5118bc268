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

#ifndef MODPOLY_LOCALPHI_HPP_
#define MODPOLY_LOCALPHI_HPP_

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "modpoly/curves.hpp"
#include "modpoly/random.hpp"
#include "modpoly/torsion.hpp"

namespace modpoly {

// phi_l(x, j) over F_{p^2} with its roots.
struct LocalPoly {
  FieldElement j;
  // The l+1 neighbours of j with multiplicity, sorted.
  std::vector<FieldElement> roots;
  // prod (x - root), constant term first; monic of degree l+1.
  std::vector<FieldElement> coefficients;
};

struct LocalOptions {
  // Overrides the extension degree chosen from the trace (it must still be
  // a multiple of the torsion field degree).
  std::optional<unsigned> extension_degree;
  TorsionStats* stats = nullptr;
};

// j must be a supersingular j-invariant given as an element of
// Field::quadratic(p). Throws PreconditionError when the trace cannot be
// determined (j not supersingular).
LocalPoly local_modular_poly(const FieldElement& j, unsigned ell, Rng& rng, const LocalOptions& options = {});

// A uniformly random point of exact order l on E over an extension field.
// group_order is #E(F_q); when absent the trace comes from the
// supersingular test, or from brute-force counting over fields with fewer
// than 10^6 elements.
CurvePoint random_l_torsion_point(const Curve& e, unsigned ell, const std::optional<mpz_class>& group_order,
                                  Rng& rng);

struct RandomIsogeny {
  // Over the extension field holding the kernel.
  Curve codomain;
  // j(codomain), moved into e.field() when it lies there.
  FieldElement j;
};

RandomIsogeny random_l_isogeny(const Curve& e, unsigned ell, const std::optional<mpz_class>& group_order, Rng& rng);

}  // namespace modpoly

#endif  // MODPOLY_LOCALPHI_HPP_
