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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "savqe/ansatz.h"
#include "savqe/vqe.h"

namespace savqe {

struct NgdOptions {
  double alpha = 0.1;        // learning rate in units of 1/J
  double eps_reg = 1e-6;     // initial Tikhonov shift on Re G
  double eps_reg_max = 1e-2; // give up above this shift
};

struct TraceRow {
  int k;
  double energy_per_site;  // E / (J N)
  double norm;             // N(theta)
  std::optional<double> fidelity;
  double grad_norm;        // |grad E| in units of J
};

using OptTrace = std::vector<TraceRow>;

struct OptState {
  int k = 0;  // number of rows recorded so far
  Params theta;
  OptTrace trace;
};

/// The regularized metric could not be factorized even at eps_reg_max.
class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves (Re G + eps I) delta = grad, escalating eps by 10x on failure.
Eigen::VectorXd solve_metric(const Eigen::MatrixXd& re_g,
                             const Eigen::VectorXd& grad,
                             const NgdOptions& options);

/// Evaluates theta_k, appends its trace row, and moves to
/// theta_{k+1} = theta_k - (alpha/J) (Re G + eps I)^{-1} grad E.
OptState ngd_step(const VariationalProblem& problem, OptState state,
                  const NgdOptions& options);

/// Appends the trace row for the current theta without updating it.
TraceRow record(const VariationalProblem& problem, OptState& state);

struct GroundConfig {
  int n_sites = 16;
  int n_layers = 1;
  double coupling = 1.0;
  int q_index = 0;
  bool symmetrize = true;
  Reference reference = Reference::kSingletProduct;
  int k_max = 1000;
  std::uint64_t seed = 1;
  NgdOptions ngd;
  /// Compare against the exact lowest state of the sector (or of the whole
  /// space when unsymmetrized). For the triplet reference this needs a
  /// sector and targets its lowest S = 1 level.
  bool with_fidelity = true;
  std::function<void(const TraceRow&)> on_row;
};

struct GroundResult {
  OptTrace trace;
  Params theta;
  double energy;                       // final E in J units
  std::optional<double> exact_energy;  // Lanczos reference
};

/// k_max rows: NGD updates between consecutive rows, the last row is the
/// evaluation at theta_{k_max}.
GroundResult run_ground(const GroundConfig& config);

struct ExcitedConfig {
  int n_sites = 16;
  int n_layers = 2;
  double coupling = 1.0;
  int k_max = 1000;
  std::uint64_t seed = 1;
  /// Independent starts per run, from seeds seed, seed + 1, ...; the run with
  /// the lowest variational energy is kept. Every sector uses the same seeds.
  int restarts = 1;
  NgdOptions ngd;
  /// Momentum indices to scan; empty means all N of them.
  std::vector<int> q_indices;
  bool with_exact = true;
  /// Worker threads for independent sectors; 0 picks hardware concurrency.
  int threads = 0;
};

struct ExcitedRow {
  int q_index;
  double q;                     // 2 pi m / N
  double ground_energy;         // variational E^(0) for S = 0, J units
  double triplet_energy;        // variational E^(q) for S = 1, J units, NaN if absent
  double delta_e;               // triplet_energy - ground_energy
  double norm;                  // N(theta) of the triplet run, 0 if absent
  std::optional<double> fidelity;
  double exact_delta_e;         // NaN when no S = 1 level exists in the sector
};

struct ExcitedResult {
  GroundResult ground;
  std::vector<ExcitedRow> rows;  // sorted by q_index
};

/// Optimizes the S = 0 ground state at q = 0, then the S = 1 functional with
/// the triplet-tail reference independently in every requested sector.
/// Throws std::invalid_argument when restarts < 1.
ExcitedResult run_excited(const ExcitedConfig& config);

}  // namespace savqe
