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

#ifndef MODPOLY_TOOLS_CLI_HPP_
#define MODPOLY_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace modpoly::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitUsage = 64;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics and help text for usage errors to `err`.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchRow {
  std::string stage;  // "local" or "full"
  unsigned ell = 0;
  unsigned n_used = 0;  // extension degree of the local computation; 0 for "full"
  double seconds = 0;   // median over repetitions
};

struct BenchReport {
  std::uint64_t p = 0;
  std::vector<BenchRow> rows;
  double local_slope = 0;
  double full_slope = 0;
};

// Times local_modular_poly at supersingular_j(p) and modular_poly_mod_p for
// each l. p = 0 picks the least prime with S(p) >= max(l) + 1. The local
// computation runs at n = 6(l - 1), or at the degree read off the trace
// when trace_n is set.
BenchReport cmd_bench(const std::vector<unsigned>& ells, std::uint64_t p, unsigned repetitions,
                      bool trace_n, std::uint64_t seed);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace modpoly::cli

#endif  // MODPOLY_TOOLS_CLI_HPP_
