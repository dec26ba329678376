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

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "savqe/ansatz.h"
#include "savqe/hamiltonian.h"
#include "savqe/state_vector.h"
#include "savqe/symmetry.h"

namespace savqe {

enum class Reference {
  kSingletProduct,  // S = 0
  kTripletTail,     // S = 1, S_z = 0
};

StateVector reference_state(int n_qubits, Reference reference);

/// Which irrep the trial state is projected onto, and from which reference.
/// Without a momentum sector the state is used as-is (no projection).
struct SectorSpec {
  CyclicGroup group;
  std::optional<MomentumSector> sector;
  Reference reference = Reference::kSingletProduct;

  static SectorSpec symmetrized(int n_sites, int q_index,
                                Reference reference = Reference::kSingletProduct);
  static SectorSpec unsymmetrized(int n_sites,
                                  Reference reference = Reference::kSingletProduct);

  bool is_symmetrized() const { return sector.has_value(); }
};

/// Below this value of N(theta) = <Psi|P|Psi> the sector component is treated
/// as absent.
inline constexpr double kNormFloor = 1e-12;

class NormFloorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Dense reference route. Each function rebuilds the states it needs; fine for
// checks and small systems, too slow for an optimizer loop at N = 16.

/// U(theta)|reference>.
StateVector trial_state(const Ansatz& ansatz, const Params& params,
                        const SectorSpec& spec);

/// P|Psi(theta)>, or |Psi(theta)> when unsymmetrized. Not normalized.
StateVector projected_state(const Ansatz& ansatz, const Params& params,
                            const SectorSpec& spec);

struct ProjectedEnergy {
  double energy;  // J units, total (not per site)
  double norm;    // N(theta)
};

/// E = <Psi|H P|Psi> / <Psi|P|Psi>. Throws NormFloorError when
/// N(theta) <= kNormFloor.
ProjectedEnergy projected_energy(const Ansatz& ansatz, const Params& params,
                                 const SectorSpec& spec,
                                 const HeisenbergRing& model);

/// |d_i Psi> = (1/2)|Psi(theta + pi e_i)>.
StateVector shifted_state(const Ansatz& ansatz, const Params& params, int i,
                          const SectorSpec& spec);

/// A_i = <Psi|P|d_i Psi> / N(theta); 2 Re A_i = d_i ln N(theta).
std::vector<cplx> berry_a(const Ansatz& ansatz, const Params& params,
                          const SectorSpec& spec);

/// d_i E = 2 Re[<Psi|P H|d_i Psi>/N - A_i E].
std::vector<double> energy_gradient(const Ansatz& ansatz, const Params& params,
                                    const SectorSpec& spec,
                                    const HeisenbergRing& model);

/// G_ij = <d_i Psi|P|d_j Psi>/N - conj(A_i) A_j.
Eigen::MatrixXcd metric_tensor(const Ansatz& ansatz, const Params& params,
                               const SectorSpec& spec);

// ---------------------------------------------------------------------------
// Fast route used by the optimizer.

namespace detail {
class CompactEngine;
}

struct Evaluation {
  double energy;                    // J units, total
  double norm;                      // N(theta)
  std::optional<double> fidelity;   // |<target|Psi^(q)>|^2 if a target is set
  std::vector<cplx> berry;          // A_i
  std::vector<double> gradient;     // d_i E
  Eigen::MatrixXcd metric;          // G_ij
};

/// Everything NGD needs at one parameter point, computed in a single sweep.
///
/// All states live in the fixed-S_z subspace of the reference, so amplitudes
/// are stored only for basis states with N/2 down spins. The derivative
/// states are generated from one forward pass over the circuit.
class VariationalProblem {
 public:
  VariationalProblem(Ansatz ansatz, SectorSpec spec, HeisenbergRing model);

  const Ansatz& ansatz() const { return ansatz_; }
  const SectorSpec& spec() const { return spec_; }
  const HeisenbergRing& model() const { return model_; }

  /// Exact state for fidelity reporting; normalized internally.
  void set_target(const StateVector& target);
  bool has_target() const { return target_ != nullptr; }

  /// Throws NormFloorError when N(theta) <= kNormFloor.
  Evaluation evaluate(const Params& params) const;

  /// Normalized symmetrized state P|Psi>/sqrt(N) in the full 2^N space.
  StateVector symmetrized_state(const Params& params) const;

 private:
  Ansatz ansatz_;
  SectorSpec spec_;
  HeisenbergRing model_;
  std::shared_ptr<const detail::CompactEngine> engine_;
  std::shared_ptr<const Eigen::VectorXcd> target_;
};

}  // namespace savqe
