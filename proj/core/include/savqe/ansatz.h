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
#include <vector>

#include "savqe/gates.h"

namespace savqe {

/// Layered eSWAP circuit on an N-qubit ring.
///
/// Link b joins qubits (b, b+1 mod N). Every layer applies N eSWAP gates in
/// two time steps: first the links b = 1, 3, ..., N-1 (those that join
/// neighbouring singlet pairs of the reference state), then the links
/// b = 0, 2, ..., N-2. Parameter index = layer * N + b.
class Ansatz {
 public:
  struct Gate {
    int param;
    int first;
    int second;
  };

  /// N must be even and >= 4 (N = 2 has a doubled link).
  Ansatz(int n_qubits, int n_layers);

  int n_qubits() const { return n_qubits_; }
  int n_layers() const { return n_layers_; }
  int n_params() const { return n_qubits_ * n_layers_; }

  int param_index(int layer, int link) const { return layer * n_qubits_ + link; }

  /// Gates in application order.
  const std::vector<Gate>& gates() const { return gates_; }

  /// Time-step slot (0-based, two per layer) in which link b is applied.
  static int slot_of(int layer, int link) { return 2 * layer + (link % 2 == 1 ? 0 : 1); }

  Circuit circuit(const std::vector<double>& theta) const;

 private:
  int n_qubits_;
  int n_layers_;
  std::vector<Gate> gates_;
};

/// Angle vector of length N * D.
struct Params {
  std::vector<double> theta;

  std::size_t size() const { return theta.size(); }
  double& operator[](std::size_t i) { return theta[i]; }
  double operator[](std::size_t i) const { return theta[i]; }
};

/// i.i.d. uniform angles on [0, 2 pi) from a seeded mt19937_64.
Params random_params(const Ansatz& ansatz, std::uint64_t seed);
Params zero_params(const Ansatz& ansatz);

}  // namespace savqe
