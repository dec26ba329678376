// Copyright 2026 The savqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "savqe/csv.h"
#include "savqe/hadamard_test.h"
#include "savqe/lanczos.h"
#include "savqe/optimizer.h"
#include "savqe/swap_network.h"

namespace savqe::cli {
namespace {

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

Reference parse_reference(const std::string& name) {
  if (name == "singlet") return Reference::kSingletProduct;
  if (name == "triplet") return Reference::kTripletTail;
  throw UsageError("unknown reference '" + name + "' (expected singlet or triplet)");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void check_ring(const RunConfig& c, bool needs_layers) {
  require(c.n_sites >= 4, "--n-sites must be at least 4");
  require(c.n_sites % 2 == 0,
          "--n-sites must be even for the singlet and triplet references");
  require(c.n_sites <= 20, "--n-sites must be at most 20");
  require(c.coupling > 0.0, "--coupling must be positive");
  if (needs_layers) {
    require(c.n_layers >= 1, "--layers must be positive");
    require(c.alpha > 0.0, "--alpha must be positive");
    require(c.iters >= 1, "--iters must be positive");
    require(c.eps_reg > 0.0, "--eps-reg must be positive");
  }
}

NgdOptions ngd_options(const RunConfig& c) {
  NgdOptions o;
  o.alpha = c.alpha;
  o.eps_reg = c.eps_reg;
  o.eps_reg_max = std::max(1e-2, c.eps_reg);
  return o;
}

}  // namespace

std::string RunConfig::canonical() const {
  std::map<std::string, std::string> kv;
  kv["mode"] = mode;
  const auto num = [](double x) { return fmt("%.17g", x); };
  if (mode == "ground" || mode == "excited") {
    kv["n_sites"] = std::to_string(n_sites);
    kv["layers"] = std::to_string(n_layers);
    kv["coupling"] = num(coupling);
    kv["alpha"] = num(alpha);
    kv["iters"] = std::to_string(iters);
    kv["seed"] = std::to_string(seed);
    kv["eps_reg"] = num(eps_reg);
  }
  if (mode == "excited") kv["restarts"] = std::to_string(restarts);
  if (mode == "ground") {
    kv["sector"] = std::to_string(sector);
    kv["reference"] = reference;
    kv["symmetry"] = no_symmetry ? "off" : "on";
  }
  if (mode == "exact") {
    kv["n_sites"] = std::to_string(n_sites);
    kv["coupling"] = num(coupling);
  }
  if (mode == "hadamard") {
    kv["samples"] = std::to_string(samples);
    kv["shots"] = std::to_string(shots);
    kv["seed"] = std::to_string(seed);
  }
  if (mode == "compile-perm") {
    kv["n_sites"] = std::to_string(n_sites);
    kv["perm"] = perm;
    kv["range"] = std::to_string(range);
  }
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

int cmd_ground(const RunConfig& c, std::ostream& data, std::ostream& log) {
  check_ring(c, true);
  const Reference ref = parse_reference(c.reference);
  if (!c.no_symmetry) MomentumSector(c.n_sites, c.sector);

  GroundConfig g;
  g.n_sites = c.n_sites;
  g.n_layers = c.n_layers;
  g.coupling = c.coupling;
  g.q_index = c.sector;
  g.symmetrize = !c.no_symmetry;
  g.reference = ref;
  g.k_max = c.iters;
  g.seed = c.seed;
  g.ngd = ngd_options(c);
  const GroundResult r = run_ground(g);

  write_trace_csv(data, r.trace);
  data << metadata_line(c.canonical()) << '\n';

  const TraceRow& last = r.trace.back();
  log << "k=" << last.k << " E/JN=" << fmt("%.8f", last.energy_per_site);
  if (r.exact_energy) {
    log << " exact E/JN=" << fmt("%.8f", *r.exact_energy / (c.coupling * c.n_sites));
  }
  if (last.fidelity) log << " fidelity=" << fmt("%.6f", *last.fidelity);
  log << " norm=" << fmt("%.6f", last.norm) << '\n';
  return 0;
}

int cmd_excited(const RunConfig& c, std::ostream& data, std::ostream& log) {
  check_ring(c, true);
  ExcitedConfig e;
  e.n_sites = c.n_sites;
  e.n_layers = c.n_layers;
  e.coupling = c.coupling;
  e.k_max = c.iters;
  e.seed = c.seed;
  e.ngd = ngd_options(c);
  e.threads = c.threads;
  require(c.restarts >= 1, "--restarts must be positive");
  e.restarts = c.restarts;
  const ExcitedResult r = run_excited(e);

  write_excitation_csv(data, r, c.n_sites, c.coupling);
  data << metadata_line(c.canonical()) << '\n';

  double worst = 0.0;
  for (const ExcitedRow& row : r.rows) {
    if (std::isfinite(row.delta_e) && std::isfinite(row.exact_delta_e)) {
      worst = std::max(worst, std::abs(row.delta_e - row.exact_delta_e));
    }
  }
  log << "ground E/JN=" << fmt("%.8f", r.ground.energy / (c.coupling * c.n_sites))
      << " sectors=" << r.rows.size()
      << " max |dE - exact|/J=" << fmt("%.6f", worst / c.coupling) << '\n';
  return 0;
}

int cmd_exact(const RunConfig& c, std::ostream& data, std::ostream& log) {
  check_ring(c, false);
  const HeisenbergRing model(c.n_sites, c.coupling);
  std::vector<SpectrumResult> results;
  for (const int m : momentum_labels(c.n_sites)) {
    for (const double sz : {0.0, 1.0}) {
      results.push_back(lanczos_ground(model, SpectrumSector{m, sz}));
    }
  }
  write_spectrum_csv(data, results, c.coupling);
  data << metadata_line(c.canonical()) << '\n';
  const SpectrumResult ground = lanczos_ground(model, SpectrumSector{0, 0.0});
  log << "q=0 S_z=0 E0/JN=" << fmt("%.10f", ground.energy / (c.coupling * c.n_sites))
      << '\n';
  return 0;
}

int cmd_hadamard(const RunConfig& c, std::ostream& data, std::ostream& log) {
  require(c.samples >= 1 && c.shots >= 1, "--samples and --shots must be positive");
  const SampleResult r = sample(c.samples, c.shots, c.seed);
  data << format_table(r);
  log << "E0/J=" << format_with_error(energy_from_estimate(r.summary.mean),
                                      energy_from_estimate(r.summary.sem), 5)
      << " (exact -2)\n";
  return 0;
}

int cmd_compile_perm(const RunConfig& c, std::ostream& data, std::ostream& log) {
  require(c.n_sites >= 2, "--n-sites must be at least 2");
  require(c.perm.empty() != (c.range == 0), "give exactly one of --perm and --range");
  Permutation target = Permutation::identity(c.n_sites);
  if (c.range != 0) {
    target = long_range_swap(c.n_sites, c.range);
  } else {
    try {
      target = Permutation::parse(c.perm);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --perm: ") + e.what());
    }
    require(target.size() == c.n_sites, "--perm length differs from --n-sites");
  }
  const SwapNetwork net = amida_decompose(target);
  data << net.to_listing();
  log << "swaps=" << net.n_swaps() << " depth=" << net.depth() << '\n';
  return 0;
}

int cmd_verify(const RunConfig&, std::ostream& data, std::ostream& log) {
  int failed = 0;
  for (const CheckResult& r : run_checks()) {
    data << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    failed += r.pass ? 0 : 1;
  }
  log << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
      << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace savqe::cli
