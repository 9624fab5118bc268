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

#ifndef MODPOLY_GLOBALPHI_HPP_
#define MODPOLY_GLOBALPHI_HPP_

#include <cstdint>
#include <vector>

#include "modpoly/bivariate.hpp"
#include "modpoly/localphi.hpp"

namespace modpoly {

// Progress of the walk on the supersingular l-isogeny graph.
struct WalkState {
  // Distinct j-invariants in visiting order, with their local polynomials.
  std::vector<FieldElement> visited;
  std::vector<LocalPoly> locals;
  // Discovered but unvisited neighbours, in discovery order.
  std::vector<FieldElement> frontier;
};

// Visits l+1 distinct supersingular j-invariants breadth first from j0.
// Neighbours of one node are queued in sorted order, so the walk does not
// depend on rng. Throws PreconditionError unless S(p) >= l+1 and
// InternalError("frontier exhausted") if the graph runs out of nodes.
WalkState collect_j_invariants(std::uint64_t p, unsigned ell, const FieldElement& j0, Rng& rng);

// phi_l mod p from l+1 local polynomials: p_k(y) for 1 <= k <= l by
// Lagrange interpolation of the local coefficients, and
// p_0(y) = y^(l+1) + interpolation of (v_0i - j_i^(l+1)). Throws
// InternalError("descent failure: coefficient not in F_p") if a
// coefficient is not fixed by Frobenius.
BivariatePoly interpolate_bivariate(const WalkState& walk, unsigned ell);

// supersingular_j, collect_j_invariants, interpolate_bivariate.
BivariatePoly modular_poly_mod_p(std::uint64_t p, unsigned ell, Rng& rng);

// Checks l and p before any work: both prime, l odd, p > 3, l != p and
// S(p) >= l+1. Throws PreconditionError.
void check_mod_p_inputs(std::uint64_t p, unsigned ell);

}  // namespace modpoly

#endif  // MODPOLY_GLOBALPHI_HPP_
