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

#include "savqe/ansatz.h"

#include <numbers>
#include <random>
#include <stdexcept>

namespace savqe {

Ansatz::Ansatz(int n_qubits, int n_layers)
    : n_qubits_(n_qubits), n_layers_(n_layers) {
  if (n_qubits < 4 || n_qubits % 2 != 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("ansatz needs an even qubit count in [4, 24]");
  }
  if (n_layers < 1) throw std::invalid_argument("ansatz needs >= 1 layer");
  for (int layer = 0; layer < n_layers; ++layer) {
    for (int parity : {1, 0}) {
      for (int b = parity; b < n_qubits; b += 2) {
        gates_.push_back({param_index(layer, b), b, (b + 1) % n_qubits});
      }
    }
  }
}

Circuit Ansatz::circuit(const std::vector<double>& theta) const {
  if (static_cast<int>(theta.size()) != n_params()) {
    throw std::invalid_argument("parameter count does not match ansatz");
  }
  Circuit c{n_qubits_, {}};
  c.ops.reserve(gates_.size());
  for (const Gate& g : gates_) {
    c.ops.push_back(ESwap{g.first, g.second, theta[g.param]});
  }
  return c;
}

Params random_params(const Ansatz& ansatz, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
  Params p;
  p.theta.resize(ansatz.n_params());
  for (double& t : p.theta) t = dist(rng);
  return p;
}

Params zero_params(const Ansatz& ansatz) {
  return Params{std::vector<double>(ansatz.n_params(), 0.0)};
}

}  // namespace savqe
