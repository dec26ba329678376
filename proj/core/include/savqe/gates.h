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

#include <array>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "savqe/permutation.h"
#include "savqe/state_vector.h"

namespace savqe {

/// exp(-i theta P_ij / 2) = cos(theta/2) I - i sin(theta/2) P_ij.
struct ESwap {
  int i;
  int j;
  double theta;
};

struct Swap {
  int i;
  int j;
};

struct PermutationGate {
  Permutation map;
};

struct OneQubit {
  int qubit;
  Eigen::Matrix2cd matrix;
};

/// Dense gate on qubits (i, j). Row/column index is 2*b_i + b_j, i.e. the
/// basis is ordered |0>_i|0>_j, |0>_i|1>_j, |1>_i|0>_j, |1>_i|1>_j.
struct TwoQubit {
  int i;
  int j;
  Eigen::Matrix4cd matrix;
};

using GateOp = std::variant<ESwap, Swap, PermutationGate, OneQubit, TwoQubit>;

/// Ordered gate list; ops[0] acts on the ket first.
struct Circuit {
  int n_qubits = 0;
  std::vector<GateOp> ops;

  /// Throws std::invalid_argument if any op references an invalid qubit.
  void validate() const;
};

/// Throws std::invalid_argument on out-of-range or colliding qubit indices.
StateVector apply_gate(StateVector state, const GateOp& gate);
void apply_gate_in_place(StateVector& state, const GateOp& gate);
StateVector apply_circuit(StateVector state, const Circuit& circuit);

// Common one- and two-qubit matrices.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd hadamard();
/// Controlled-NOT with control i (high bit) and target j.
Eigen::Matrix4cd cnot_matrix();

/// Matrix of exp(-i theta P / 2) in the TwoQubit basis ordering.
Eigen::Matrix4cd eswap_matrix(double theta);

/// The six factors whose ordered product (factors[0] * ... * factors[5])
/// equals eswap_matrix(theta): CNOT (target i, control j), controlled-R_X
/// (control i), X (x) I, R_{-theta/2} (x) I, X (x) I, CNOT (target i,
/// control j). The rightmost factor acts first.
std::array<Eigen::Matrix4cd, 6> eswap_decomposition_factors(double theta);

struct DecompositionCheck {
  bool ok;
  double max_deviation;
};

/// Multiplies the decomposition factors and compares elementwise against
/// eswap_matrix(theta); ok iff the largest deviation is <= 1e-12.
DecompositionCheck verify_eswap_decomposition(double theta);

}  // namespace savqe
