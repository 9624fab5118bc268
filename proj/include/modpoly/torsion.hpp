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

#ifndef MODPOLY_TORSION_HPP_
#define MODPOLY_TORSION_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "modpoly/curves.hpp"
#include "modpoly/random.hpp"

namespace modpoly {

// Two points generating E[l] over an extension of degree n of the curve's
// field, together with the group order S = #E(F_{q^n}) = s * l^k.
struct TorsionBasis {
  CurvePoint P = CurvePoint::infinity();
  CurvePoint Q = CurvePoint::infinity();
  unsigned n = 0;
  mpz_class S;
  unsigned k = 0;
  mpz_class s;
};

// Counters for the randomized steps of torsion_basis. A draw is one pair
// (U, V); it succeeds when neither s*U nor s*V vanishes. Each successful
// draw is followed by one membership test of Q in <P>.
struct TorsionStats {
  std::uint64_t draws = 0;
  std::uint64_t draw_successes = 0;
  std::uint64_t membership_tests = 0;
  std::uint64_t dependent = 0;
};

// Outer attempts (draw plus independence test) before giving up.
inline constexpr int kTorsionRetries = 20;

// Degree of an extension containing E[l]: l-1, 2(l-1), 3(l-1) for the
// supersingular traces +-2 sqrt(q), 0, +-sqrt(q). Other traces yield the
// first entry of torsion_extension_trials().
unsigned torsion_extension_degree(const TraceData& trace, unsigned ell);

// Degrees to try in order: the single supersingular value, or l^2 - 1
// followed by l(l - 1) for any other trace.
std::vector<unsigned> torsion_extension_trials(const TraceData& trace, unsigned ell);

// True iff Q = m P for some 0 <= m < l, by baby-step giant-step. P must
// have order l on e.
bool bsgs_member(const Curve& e, const CurvePoint& P, const CurvePoint& Q, unsigned ell);

// Random basis of E[l] over the extension of degree n (defaults to
// torsion_extension_degree). The returned points live on
// e.base_change(basis.P.x().field()). The extension modulus is a fixed
// function of (e.field(), n); only the points depend on rng.
// Throws PreconditionError("ℓ-valuation too small") when l^2 does not
// divide S and InternalError("retry budget exhausted") after
// kTorsionRetries failed attempts.
TorsionBasis torsion_basis(const Curve& e, unsigned ell, const TraceData& trace, Rng& rng,
                           TorsionStats* stats = nullptr);
TorsionBasis torsion_basis(const Curve& e, unsigned ell, const TraceData& trace, unsigned n,
                           Rng& rng, TorsionStats* stats = nullptr);

}  // namespace modpoly

#endif  // MODPOLY_TORSION_HPP_
