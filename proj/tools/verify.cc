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

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "commands.h"
#include "savqe/gates.h"
#include "savqe/hamiltonian.h"
#include "savqe/swap_network.h"
#include "savqe/symmetry.h"

namespace savqe::cli {
namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  StateVector s(n);
  for (std::size_t x = 0; x < s.dim(); ++x) s[x] = {g(rng), g(rng)};
  s.normalize();
  return s;
}

CheckResult check_eswap_decomposition() {
  const double pi = std::numbers::pi;
  std::vector<double> thetas{2.0 * std::acos(-std::sqrt(2.0 / 3.0)),
                             2.0 * std::acos(-std::sqrt(1.0 / 3.0))};
  for (int k = 0; k < 18; ++k) thetas.push_back(-2.0 * pi + 4.0 * pi * k / 17.0);
  double worst = 0.0;
  for (const double t : thetas) {
    worst = std::max(worst, verify_eswap_decomposition(t).max_deviation);
  }
  return {"eswap decomposition, 20 angles", worst <= 1e-12, "max dev " + sci(worst)};
}

CheckResult check_amida_counts() {
  bool ok = true;
  std::string detail;
  for (const int r : {2, 4, 6, 8}) {
    const SwapNetwork net = amida_decompose(long_range_swap(16, r));
    const SwapCount want = swap_count_bound(r);
    ok = ok && net.n_swaps() == want.n_swap && net.depth() == want.depth &&
         net.composed() == long_range_swap(16, r);
    detail += "r=" + std::to_string(r) + ":" + std::to_string(net.n_swaps()) + "/" +
              std::to_string(net.depth()) + " ";
  }
  return {"long-range swap networks (swaps/depth)", ok, detail};
}

CheckResult check_theta_swap() {
  const int n = 16;
  const SwapNetwork net = amida_decompose(long_range_swap(n, 8));
  const Ansatz ansatz(n, 4);
  const SwapEmbedding emb = theta_swap_params(ansatz, net);
  const StateVector phi = singlet_product(n);
  const StateVector got = apply_circuit(phi, ansatz.circuit(emb.params.theta));
  const StateVector want = apply_gate(phi, PermutationGate{long_range_swap(n, 8)});
  const double overlap = std::abs(inner(want, got));
  bool shallow_rejected = false;
  try {
    theta_swap_params(Ansatz(n, 3), net);
  } catch (const std::invalid_argument&) {
    shallow_rejected = true;
  }
  return {"theta-swap embedding N=16 r=8 D=4",
          overlap >= 1.0 - 1e-10 && shallow_rejected,
          "overlap " + std::to_string(overlap) +
              (shallow_rejected ? ", D=3 rejected" : ", D=3 accepted")};
}

CheckResult check_projectors() {
  const int n = 8;
  const CyclicGroup group(n);
  const StateVector psi = random_state(n, 11);
  StateVector sum(n);
  sum[0] = 0.0;
  double worst = 0.0;
  for (const int m : momentum_labels(n)) {
    const MomentumSector sector(n, m);
    const StateVector p = project(psi, group, sector);
    worst = std::max(worst, max_abs_diff(project(p, group, sector), p));
    worst = std::max(worst, max_abs_diff(translate(p, 1), sector.character(1) * p));
    sum += p;
  }
  worst = std::max(worst, max_abs_diff(sum, psi));
  return {"projectors N=8: idempotent, eigenstates of T, complete", worst <= 1e-12,
          "max dev " + sci(worst)};
}

CheckResult check_singlet_algebra() {
  const double theta = 0.7;
  const auto pairs = [](int a, int b, int c, int d) {
    const std::array<QubitPair, 2> p{{{a, b, PairKind::kSinglet}, {c, d, PairKind::kSinglet}}};
    return pair_product(4, p);
  };
  const StateVector s = pairs(0, 1, 2, 3);
  double worst = max_abs_diff(apply_gate(s, Swap{0, 1}), -1.0 * s);
  const cplx phase = std::polar(1.0, theta / 2);
  worst = std::max(worst, max_abs_diff(apply_gate(s, ESwap{0, 1, theta}), phase * s));
  const StateVector recombined = pairs(0, 2, 1, 3);
  worst = std::max(worst, max_abs_diff(apply_gate(s, Swap{1, 2}), recombined));
  const StateVector mixed = std::cos(theta / 2) * s +
                            cplx{0.0, -std::sin(theta / 2)} * recombined;
  worst = std::max(worst, max_abs_diff(apply_gate(s, ESwap{1, 2, theta}), mixed));
  return {"singlet algebra (sign, phase, recombination, superposition)",
          worst <= 1e-12, "max dev " + sci(worst)};
}

CheckResult check_commutators() {
  const int n = 8;
  const HeisenbergRing model(n);
  const StateVector psi = random_state(n, 5);
  const CyclicGroup group(n);
  const MomentumSector sector(n, 3);
  double worst = max_abs_diff(apply_h(model, project(psi, group, sector)),
                              project(apply_h(model, psi), group, sector));
  worst = std::max(worst, max_abs_diff(apply_h(model, apply_total_spin_sq(psi)),
                                       apply_total_spin_sq(apply_h(model, psi))));
  worst = std::max(worst, max_abs_diff(apply_h(model, apply_total_sz(psi)),
                                       apply_total_sz(apply_h(model, psi))));
  return {"[H, P], [H, S^2], [H, S_z] at N=8", worst <= 1e-10, "max dev " + sci(worst)};
}

}  // namespace

std::vector<CheckResult> run_checks() {
  return {check_eswap_decomposition(), check_amida_counts(), check_theta_swap(),
          check_projectors(), check_singlet_algebra(), check_commutators()};
}

}  // namespace savqe::cli
