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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modpoly/classical.hpp"
#include "modpoly/crtlift.hpp"
#include "modpoly/curves.hpp"
#include "modpoly/errors.hpp"
#include "modpoly/fields.hpp"
#include "modpoly/globalphi.hpp"
#include "modpoly/localphi.hpp"
#include "modpoly/ssinit.hpp"
#include "modpoly/torsion.hpp"

namespace modpoly::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Command line settings shared by all subcommands.
struct RunConfig {
  unsigned ell = 0;
  std::uint64_t p = 0;
  std::string primes;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string j;
  std::int64_t d = 0;
  unsigned n = 0;
  unsigned k = 0;
  std::string csv;
  std::string ells = "11,23,47";
  unsigned reps = 1;
  bool trace_n = false;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("MODPOLY_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t v = 0;
  std::istringstream in(env);
  in >> v;
  if (!in || !in.eof()) throw UsageError(std::string("MODPOLY_SEED is not an unsigned integer: ") + env);
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw UsageError("bad list entry '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

json grid_json(const BivariatePoly& g) {
  json terms = json::array();
  for (std::size_t k = g.size(); k-- > 0;) {
    for (std::size_t m = g.size(); m-- > 0;) {
      if (g.at(k, m) != 0) terms.push_back(json::array({k, m, g.at(k, m).get_str()}));
    }
  }
  return json{{"ell", g.ell()}, {"modulus", g.modulus()}, {"terms", terms}};
}

void print_grid(const BivariatePoly& g, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << grid_json(g).dump() << "\n";
  } else {
    out << g.to_text();
  }
}

FieldElement parse_j(std::uint64_t p, const std::string& text) {
  if (!is_prime(p) || p <= 3) throw PreconditionError("p must be a prime greater than 3");
  return Field::quadratic(p)->parse(text);
}

int run_local(const RunConfig& c, std::ostream& out) {
  Rng rng(c.seed);
  const LocalPoly local = local_modular_poly(parse_j(c.p, c.j), c.ell, rng);
  if (c.format == "json") {
    json coeffs = json::array();
    json roots = json::array();
    for (const auto& a : local.coefficients) coeffs.push_back(a.to_string());
    for (const auto& r : local.roots) roots.push_back(r.to_string());
    out << json{{"p", c.p}, {"ell", c.ell}, {"j", local.j.to_string()}, {"coefficients", coeffs}, {"roots", roots}}
               .dump()
        << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < local.coefficients.size(); ++i) {
    out << "coefficient " << i << " " << local.coefficients[i].to_string() << "\n";
  }
  for (const auto& r : local.roots) out << "root " << r.to_string() << "\n";
  return kExitOk;
}

int run_random_isogeny(const RunConfig& c, std::ostream& out) {
  Rng rng(c.seed);
  const Curve e = curve_from_j(parse_j(c.p, c.j));
  const RandomIsogeny iso = random_l_isogeny(e, c.ell, std::nullopt, rng);
  out << "domain " << e.to_string() << "\n";
  out << "codomain_field " << iso.codomain.field()->describe() << "\n";
  out << "codomain " << iso.codomain.to_string() << "\n";
  out << "j " << iso.j.to_string() << "\n";
  return kExitOk;
}

int run_growth(const RunConfig& c, std::ostream& out) {
  const GrowthReport report = growth_report(c.n, c.k);
  if (!c.csv.empty()) {
    std::ofstream f(c.csv);
    if (!f) throw PreconditionError("cannot open " + c.csv);
    f << std::setprecision(10) << "n,k,logcoeff,upper,ratio\n";
    for (const auto& cell : report.cells) {
      f << cell.n << "," << cell.k << "," << cell.logcoeff << "," << cell.upper << "," << cell.ratio << "\n";
    }
  }
  double min_ratio = INFINITY;
  for (const auto& cell : report.cells) {
    if (cell.n >= 20 * cell.k) min_ratio = std::min(min_ratio, cell.ratio);
  }
  out << std::setprecision(6);
  out << "cells " << report.cells.size() << "\n";
  out << "excluded " << report.excluded << "\n";
  out << "upper_bound_holds true\n";
  if (std::isfinite(min_ratio)) out << "min_ratio_n_over_k_ge_20 " << min_ratio << "\n";
  if (!report.petersson.empty()) out << "petersson_k1_n" << c.n << " " << report.petersson.back() << "\n";
  return kExitOk;
}

int run_bench(const RunConfig& c, std::ostream& out) {
  std::vector<unsigned> ells;
  for (auto v : parse_list(c.ells)) ells.push_back(static_cast<unsigned>(v));
  if (!std::is_sorted(ells.begin(), ells.end())) throw UsageError("--ells must be ascending");
  const BenchReport r = cmd_bench(ells, c.p, c.reps, c.trace_n, c.seed);
  out << std::setprecision(6) << std::fixed;
  out << "stage,ell,p,n_used,seconds,slope\n";
  for (const auto& row : r.rows) {
    out << row.stage << "," << row.ell << "," << r.p << "," << row.n_used << "," << row.seconds << ","
        << (row.stage == "local" ? r.local_slope : r.full_slope) << "\n";
  }
  return kExitOk;
}

int run(const std::string& command, const RunConfig& c, std::ostream& out) {
  if (command == "phi-mod-p") {
    Rng rng(c.seed);
    print_grid(modular_poly_mod_p(c.p, c.ell, rng), c.format, out);
  } else if (command == "phi-int") {
    std::vector<std::uint64_t> primes;
    if (!c.primes.empty()) primes = parse_list(c.primes);
    Rng rng(c.seed);
    print_grid(crt_lift(c.ell, primes, rng).poly, c.format, out);
  } else if (command == "oracle-phi") {
    print_grid(classical_phi(c.ell), c.format, out);
  } else if (command == "local") {
    return run_local(c, out);
  } else if (command == "ssj") {
    if (!is_prime(c.p) || c.p <= 3) throw PreconditionError("p must be a prime greater than 3");
    Rng rng(c.seed);
    out << supersingular_j(c.p, rng).to_string() << "\n";
  } else if (command == "hilbert") {
    for (const auto& a : hilbert_class_poly(c.d).coefficients) out << a.get_str() << "\n";
  } else if (command == "appendix-growth") {
    return run_growth(c, out);
  } else if (command == "random-isogeny") {
    return run_random_isogeny(c, out);
  } else if (command == "bench") {
    return run_bench(c, out);
  }
  return kExitOk;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : (v[h - 1] + v[h]) / 2;
}

template <typename F>
double time_seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BenchReport cmd_bench(const std::vector<unsigned>& ells, std::uint64_t p, unsigned repetitions, bool trace_n,
                      std::uint64_t seed) {
  BenchReport report;
  if (ells.empty()) return report;
  if (p == 0) {
    p = 5;
    while (!is_prime(p) || supersingular_count(p) < ells.back() + 1) ++p;
  }
  report.p = p;
  repetitions = std::max(repetitions, 1u);
  std::vector<double> xs, local_t, full_t;
  for (unsigned ell : ells) {
    check_mod_p_inputs(p, ell);
    Rng rng(mix_seed(seed, ell));
    const FieldElement j0 = supersingular_j(p, rng);
    const TraceData trace = supersingular_trace(curve_from_j(j0), rng);
    LocalOptions opts;
    const unsigned n_used = trace_n ? torsion_extension_degree(trace, ell) : 6 * (ell - 1);
    opts.extension_degree = n_used;

    std::vector<double> lt, ft;
    for (unsigned r = 0; r < repetitions; ++r) {
      lt.push_back(time_seconds([&] { local_modular_poly(j0, ell, rng, opts); }));
      ft.push_back(time_seconds([&] { modular_poly_mod_p(p, ell, rng); }));
    }
    report.rows.push_back({"local", ell, n_used, median(lt)});
    report.rows.push_back({"full", ell, 0, median(ft)});
    xs.push_back(ell);
    local_t.push_back(median(lt));
    full_t.push_back(median(ft));
  }
  if (xs.size() >= 2) {
    report.local_slope = loglog_slope(xs, local_t);
    report.full_slope = loglog_slope(xs, full_t);
  }
  return report;
}

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular polynomials via supersingular isogeny graphs", "modpoly"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_seed = [&](CLI::App* s) { s->add_option("--seed", c.seed, "RNG seed (default: $MODPOLY_SEED or 0)"); };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* phi_mod_p = app.add_subcommand("phi-mod-p", "phi_l(x, y) mod p by walking the supersingular graph");
  phi_mod_p->add_option("--ell", c.ell, "Odd prime l")->required();
  phi_mod_p->add_option("--p", c.p, "Prime p with S(p) >= l+1")->required();
  add_seed(phi_mod_p);
  add_format(phi_mod_p);

  auto* phi_int = app.add_subcommand("phi-int", "phi_l(x, y) over the integers by CRT");
  phi_int->add_option("--ell", c.ell, "Odd prime l")->required();
  phi_int->add_option("--primes", c.primes, "Comma separated primes (default: automatic)");
  add_seed(phi_int);
  add_format(phi_int);

  auto* local = app.add_subcommand("local", "phi_l(x, j) over F_{p^2} with its roots");
  local->add_option("--p", c.p, "Prime p")->required();
  local->add_option("--ell", c.ell, "Odd prime l")->required();
  local->add_option("--j", c.j, "Supersingular j, as 'a' or 'a,b' (a + b s)")->required();
  add_seed(local);
  add_format(local);

  auto* ssj = app.add_subcommand("ssj", "A supersingular j-invariant mod p");
  ssj->add_option("--p", c.p, "Prime p > 3")->required();
  add_seed(ssj);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert class polynomial, constant term first");
  hilbert->add_option("--d", c.d, "Negative discriminant")->required();

  auto* oracle = app.add_subcommand("oracle-phi", "phi_l(x, y) from q-expansions");
  oracle->add_option("--ell", c.ell, "Prime l <= 13")->required();
  add_format(oracle);

  auto* growth = app.add_subcommand("appendix-growth", "Coefficient growth of j^k");
  growth->add_option("--n", c.n, "Largest q-exponent")->required()->check(CLI::PositiveNumber);
  growth->add_option("--k", c.k, "Largest power of j")->required()->check(CLI::PositiveNumber);
  growth->add_option("--csv", c.csv, "CSV output path");

  auto* isogeny = app.add_subcommand("random-isogeny", "Codomain of a random l-isogeny from the curve of j");
  isogeny->add_option("--p", c.p, "Prime p")->required();
  isogeny->add_option("--ell", c.ell, "Odd prime l")->required();
  isogeny->add_option("--j", c.j, "j-invariant in F_{p^2}")->required();
  add_seed(isogeny);

  auto* bench = app.add_subcommand("bench", "Timing of local and full computations");
  bench->add_option("--ells", c.ells, "Ascending comma separated primes");
  bench->add_option("--p", c.p, "Fixed prime (default: least with S(p) >= max l + 1)");
  bench->add_option("--reps", c.reps, "Repetitions per timing")->check(CLI::PositiveNumber);
  bench->add_flag("--trace-n", c.trace_n, "Local extension degree from the trace instead of 6(l-1)");
  add_seed(bench);

  try {
    c.seed = default_seed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace modpoly::cli
