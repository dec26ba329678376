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

#include "savqe/gates.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace savqe {
namespace {

constexpr cplx kI{0.0, 1.0};

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw std::invalid_argument("qubit index " + std::to_string(q) +
                                " out of range for " + std::to_string(n) +
                                " qubits");
  }
}

void check_pair(int i, int j, int n) {
  check_qubit(i, n);
  check_qubit(j, n);
  if (i == j) throw std::invalid_argument("two-qubit gate on identical qubits");
}

struct Validator {
  int n;
  void operator()(const ESwap& g) const { check_pair(g.i, g.j, n); }
  void operator()(const Swap& g) const { check_pair(g.i, g.j, n); }
  void operator()(const PermutationGate& g) const {
    if (g.map.size() != n) {
      throw std::invalid_argument("permutation size differs from qubit count");
    }
  }
  void operator()(const OneQubit& g) const { check_qubit(g.qubit, n); }
  void operator()(const TwoQubit& g) const { check_pair(g.i, g.j, n); }
};

struct Applier {
  StateVector& s;

  void operator()(const ESwap& g) const {
    const double c = std::cos(0.5 * g.theta);
    const double sn = std::sin(0.5 * g.theta);
    const cplx diag{c, -sn};
    const cplx off{0.0, -sn};
    const std::size_t bi = std::size_t{1} << g.i;
    const std::size_t bj = std::size_t{1} << g.j;
    auto a = s.amplitudes();
    for (std::size_t x = 0; x < a.size(); ++x) {
      const bool xi = x & bi;
      const bool xj = x & bj;
      if (xi == xj) {
        a[x] *= diag;
      } else if (!xi) {
        const std::size_t y = x ^ bi ^ bj;
        const cplx ax = a[x];
        const cplx ay = a[y];
        a[x] = c * ax + off * ay;
        a[y] = c * ay + off * ax;
      }
    }
  }

  void operator()(const Swap& g) const {
    const std::size_t bi = std::size_t{1} << g.i;
    const std::size_t bj = std::size_t{1} << g.j;
    auto a = s.amplitudes();
    for (std::size_t x = 0; x < a.size(); ++x) {
      if ((x & bi) && !(x & bj)) std::swap(a[x], a[x ^ bi ^ bj]);
    }
  }

  void operator()(const PermutationGate& g) const {
    auto a = s.amplitudes();
    std::vector<cplx> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      out[g.map.apply_to_index(x)] = a[x];
    }
    std::copy(out.begin(), out.end(), a.begin());
  }

  void operator()(const OneQubit& g) const {
    const std::size_t b = std::size_t{1} << g.qubit;
    const Eigen::Matrix2cd& m = g.matrix;
    auto a = s.amplitudes();
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (x & b) continue;
      const cplx a0 = a[x];
      const cplx a1 = a[x | b];
      a[x] = m(0, 0) * a0 + m(0, 1) * a1;
      a[x | b] = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }

  void operator()(const TwoQubit& g) const {
    const std::size_t bi = std::size_t{1} << g.i;
    const std::size_t bj = std::size_t{1} << g.j;
    auto a = s.amplitudes();
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (x & (bi | bj)) continue;
      const std::size_t idx[4] = {x, x | bj, x | bi, x | bi | bj};
      Eigen::Vector4cd v;
      for (int k = 0; k < 4; ++k) v[k] = a[idx[k]];
      const Eigen::Vector4cd w = g.matrix * v;
      for (int k = 0; k < 4; ++k) a[idx[k]] = w[k];
    }
  }
};

}  // namespace

void Circuit::validate() const {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("circuit qubit count out of range");
  }
  for (const GateOp& op : ops) std::visit(Validator{n_qubits}, op);
}

void apply_gate_in_place(StateVector& state, const GateOp& gate) {
  std::visit(Validator{state.n_qubits()}, gate);
  std::visit(Applier{state}, gate);
}

StateVector apply_gate(StateVector state, const GateOp& gate) {
  apply_gate_in_place(state, gate);
  return state;
}

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
  if (circuit.n_qubits != state.n_qubits()) {
    throw std::invalid_argument("circuit and state qubit counts differ");
  }
  for (const GateOp& op : circuit.ops) apply_gate_in_place(state, op);
  return state;
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, -kI, kI, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd m;
  m << 1, 0, 0, 0,
       0, 1, 0, 0,
       0, 0, 0, 1,
       0, 0, 1, 0;
  return m;
}

Eigen::Matrix4cd eswap_matrix(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const cplx e = std::exp(-kI * (0.5 * theta));
  Eigen::Matrix4cd m;
  m << e, 0, 0, 0,
       0, c, -kI * s, 0,
       0, -kI * s, c, 0,
       0, 0, 0, e;
  return m;
}

std::array<Eigen::Matrix4cd, 6> eswap_decomposition_factors(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const cplx e = std::exp(-kI * (0.5 * theta));

  Eigen::Matrix4cd cnot_ji;
  cnot_ji << 1, 0, 0, 0,
             0, 0, 0, 1,
             0, 0, 1, 0,
             0, 1, 0, 0;
  Eigen::Matrix4cd x_i;
  x_i << 0, 0, 1, 0,
         0, 0, 0, 1,
         1, 0, 0, 0,
         0, 1, 0, 0;
  Eigen::Matrix4cd phase_i;
  phase_i << 1, 0, 0, 0,
             0, 1, 0, 0,
             0, 0, e, 0,
             0, 0, 0, e;
  Eigen::Matrix4cd crx;
  crx << 1, 0, 0, 0,
         0, 1, 0, 0,
         0, 0, c, -kI * s,
         0, 0, -kI * s, c;
  return {cnot_ji, x_i, phase_i, x_i, crx, cnot_ji};
}

DecompositionCheck verify_eswap_decomposition(double theta) {
  const auto f = eswap_decomposition_factors(theta);
  Eigen::Matrix4cd product = Eigen::Matrix4cd::Identity();
  for (const auto& m : f) product = product * m;
  const double dev = (product - eswap_matrix(theta)).cwiseAbs().maxCoeff();
  return {dev <= 1e-12, dev};
}

}  // namespace savqe
