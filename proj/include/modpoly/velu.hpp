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

#ifndef MODPOLY_VELU_HPP_
#define MODPOLY_VELU_HPP_

#include <span>
#include <vector>

#include "modpoly/curves.hpp"
#include "modpoly/torsion.hpp"

namespace modpoly {

// Sums over the nonzero kernel points Q = (x, y):
//   t = sum t(Q),  w = sum (u(Q) + x t(Q)),
// with t(Q) = 2 g^x(Q) - a1 g^y(Q) and u(Q) = g^y(Q)^2, where
// g^x = 3x^2 + 2a2 x + a4 - a1 y and g^y = -2y - a1 x - a3.
struct VeluAccumulator {
  FieldElement t;
  FieldElement w;
};

// Accumulates over the kernel {+-Q : Q in half}, i.e. `half` must list one
// point from each pair {Q, -Q} of an odd-order kernel. Since t(Q) and u(Q)
// only depend on Q up to sign, each listed point contributes twice.
VeluAccumulator velu_accumulate(const Curve& e, std::span<const CurvePoint> half);

// The quotient curve from the accumulated sums. The sums run over both
// points of each {Q, -Q} pair, so the per-pair values t/2 and w/2 enter
// Velu's A4 and A6. An empty kernel (t = w = 0) gives e back.
Curve velu_codomain(const Curve& e, const VeluAccumulator& acc);

struct Isogeny {
  Curve codomain;
  FieldElement j;
};

// E/<G> for G of exact order l. Throws DomainError("kernel generator order
// mismatch") otherwise.
Isogeny velu_isogeny(const Curve& e, const CurvePoint& g, unsigned ell);

// j-invariants of E/G_i for G_1 = <Q>, G_{1+i} = <P + (i-1)Q>, 1 <= i <= l,
// in that order, mapped into e.field(). `e` is the curve over its field of
// definition; the basis lives over an extension of it. Throws
// InternalError when a j-invariant does not lie in e.field().
std::vector<FieldElement> quotient_j_set(const Curve& e, const TorsionBasis& basis, unsigned ell);

}  // namespace modpoly

#endif  // MODPOLY_VELU_HPP_
