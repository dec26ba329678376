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

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace savqe {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 24;

/// Dense amplitude vector over the 2^n computational basis states.
///
/// Qubit i is bit i of the basis index (little-endian), and |0> on a qubit
/// maps to a cleared bit. Global phases are kept as-is.
class StateVector {
 public:
  /// The all-zero state |0...0>.
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }

  cplx operator[](std::size_t i) const { return amplitudes_[i]; }
  cplx& operator[](std::size_t i) { return amplitudes_[i]; }

  std::span<const cplx> amplitudes() const { return amplitudes_; }
  std::span<cplx> amplitudes() { return amplitudes_; }

  double norm_squared() const;
  double norm() const;

  /// Rescales to unit norm. Throws std::domain_error on the zero vector.
  StateVector& normalize();

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(cplx factor);

 private:
  int n_qubits_;
  std::vector<cplx> amplitudes_;
};

StateVector operator+(StateVector a, const StateVector& b);
StateVector operator-(StateVector a, const StateVector& b);
StateVector operator*(cplx factor, StateVector a);

/// <a|b>. Throws std::invalid_argument when the qubit counts differ.
cplx inner(const StateVector& a, const StateVector& b);

/// Largest |a_i - b_i|.
double max_abs_diff(const StateVector& a, const StateVector& b);

/// True when a and b agree up to a global phase: |<a|b>| = |a||b| within tol.
bool equal_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol = 1e-10);

/// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const StateVector& a, const StateVector& b);

/// Basis state from a bit string; character k is the value of qubit k.
StateVector basis_state(int n_qubits, std::string_view bits);
StateVector basis_state(int n_qubits, std::uint64_t index);

enum class PairKind {
  kSinglet,     // (|01> - |10>)/sqrt2
  kTriplet0,    // (|01> + |10>)/sqrt2
  kTripletUp,   // |00>
  kTripletDown  // |11>
};

struct QubitPair {
  int first;
  int second;
  PairKind kind = PairKind::kSinglet;
};

/// Product of two-qubit pair states. Every qubit must appear in exactly one
/// pair. The first qubit of a pair is the left ket in the pair definitions.
StateVector pair_product(int n_qubits, std::span<const QubitPair> pairs);

/// |s_{0,1}>|s_{2,3}>...|s_{N-2,N-1}>.
StateVector singlet_product(int n_qubits);

/// Singlet product with the last pair replaced by the S_z = 0 triplet
/// |t_{N-2,N-1}>; total S = 1, S_z = 0.
StateVector triplet_tail_product(int n_qubits);

}  // namespace savqe
