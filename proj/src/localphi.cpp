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

#include "modpoly/localphi.hpp"

#include <algorithm>

#include "modpoly/errors.hpp"
#include "modpoly/polynomial.hpp"
#include "modpoly/velu.hpp"

namespace modpoly {
namespace {

TraceData trace_of(const Curve& e, const std::optional<mpz_class>& group_order, Rng& rng) {
  const mpz_class q = e.field()->order();
  if (!q.fits_slong_p()) throw PreconditionError("field too large for trace bookkeeping");
  if (group_order) return TraceData{q.get_si(), mpz_class(q + 1 - *group_order).get_si()};
  if (e.field()->level() == FieldLevel::kQuadratic) {
    try {
      return supersingular_trace(e, rng);
    } catch (const PreconditionError&) {
      if (q >= 1000000) throw;
    }
  }
  if (q >= 1000000) throw PreconditionError("group order required for this curve");
  return TraceData{q.get_si(), mpz_class(q + 1 - brute_force_point_count(e)).get_si()};
}

TorsionBasis basis_for(const Curve& e, unsigned ell, const TraceData& trace, Rng& rng) {
  const auto trials = torsion_extension_trials(trace, ell);
  for (std::size_t i = 0; i < trials.size(); ++i) {
    try {
      return torsion_basis(e, ell, trace, trials[i], rng);
    } catch (const PreconditionError&) {
      if (i + 1 == trials.size()) throw;
    } catch (const InternalError&) {
      if (i + 1 == trials.size()) throw;
    }
  }
  throw InternalError("no extension degree to try");
}

}  // namespace

LocalPoly local_modular_poly(const FieldElement& j, unsigned ell, Rng& rng, const LocalOptions& options) {
  if (j.field()->level() != FieldLevel::kQuadratic) throw DomainError("j must lie in F_{p^2}");
  const Curve e = curve_from_j(j);
  const TraceData trace = supersingular_trace(e, rng);
  const unsigned n = options.extension_degree.value_or(torsion_extension_degree(trace, ell));
  const TorsionBasis basis = torsion_basis(e, ell, trace, n, rng, options.stats);
  LocalPoly out;
  out.j = j;
  out.roots = quotient_j_set(e, basis, ell);
  std::sort(out.roots.begin(), out.roots.end());
  out.coefficients = Polynomial::from_roots(j.field(), out.roots).coefficients();
  return out;
}

CurvePoint random_l_torsion_point(const Curve& e, unsigned ell, const std::optional<mpz_class>& group_order,
                                  Rng& rng) {
  const TraceData trace = trace_of(e, group_order, rng);
  const TorsionBasis basis = basis_for(e, ell, trace, rng);
  const Curve ee = e.base_change(basis.P.x().field());
  std::uint64_t a = 0, b = 0;
  while (a == 0 && b == 0) {
    a = uniform_below(rng, ell);
    b = uniform_below(rng, ell);
  }
  return ee.add_unchecked(ee.scalar_mul_unchecked(a, basis.P), ee.scalar_mul_unchecked(b, basis.Q));
}

RandomIsogeny random_l_isogeny(const Curve& e, unsigned ell, const std::optional<mpz_class>& group_order, Rng& rng) {
  const CurvePoint g = random_l_torsion_point(e, ell, group_order, rng);
  const FieldPtr& ext = g.x().field();
  Isogeny iso = velu_isogeny(e.base_change(ext), g, ell);
  FieldElement j = iso.j;
  if (auto down = ext->descend(iso.j, e.field())) j = std::move(*down);
  return RandomIsogeny{std::move(iso.codomain), std::move(j)};
}

}  // namespace modpoly
