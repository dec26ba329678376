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

#include "savqe/hamiltonian.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace savqe {
namespace {

void check_size(const HeisenbergRing& model, const StateVector& psi) {
  if (model.n_sites() != psi.n_qubits()) {
    throw std::invalid_argument("model and state sizes differ");
  }
}

// sum_{i<j} P_ij |psi>
StateVector sum_of_swaps(const StateVector& psi) {
  const int n = psi.n_qubits();
  StateVector out(n);
  out[0] = 0.0;
  for (std::size_t x = 0; x < psi.dim(); ++x) {
    const cplx a = psi[x];
    if (a == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const bool bi = (x >> i) & 1;
        const bool bj = (x >> j) & 1;
        const std::size_t y =
            bi == bj ? x : x ^ ((std::size_t{1} << i) | (std::size_t{1} << j));
        out[y] += a;
      }
    }
  }
  return out;
}

double expectation(const StateVector& psi, const StateVector& op_psi) {
  return inner(psi, op_psi).real() / psi.norm_squared();
}

}  // namespace

HeisenbergRing::HeisenbergRing(int n_sites, double coupling)
    : n_sites_(n_sites), coupling_(coupling) {
  if (n_sites < 2 || n_sites > kMaxQubits) {
    throw std::invalid_argument("ring size out of range");
  }
}

StateVector apply_h(const HeisenbergRing& model, const StateVector& psi) {
  check_size(model, psi);
  const int n = model.n_sites();
  const double half_j = 0.5 * model.coupling();
  StateVector out(n);
  out[0] = 0.0;
  for (int k = 0; k < model.n_bonds(); ++k) {
    const std::size_t bi = std::size_t{1} << k;
    const std::size_t bj = std::size_t{1} << ((k + 1) % n);
    for (std::size_t x = 0; x < psi.dim(); ++x) {
      const bool xi = x & bi;
      const bool xj = x & bj;
      // (J/2)(P - 1/2): P is the identity on aligned spins.
      if (xi == xj) {
        out[x] += 0.5 * half_j * psi[x];
      } else {
        out[x] += half_j * (psi[x ^ bi ^ bj] - 0.5 * psi[x]);
      }
    }
  }
  return out;
}

double energy(const HeisenbergRing& model, const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("energy() needs a normalized state");
  }
  const cplx e = inner(psi, apply_h(model, psi));
  if (std::abs(e.imag()) > 1e-10 * std::max(1.0, std::abs(e.real()))) {
    throw std::logic_error("energy expectation has an imaginary part");
  }
  return e.real();
}

StateVector apply_total_spin_sq(const StateVector& psi) {
  // (1/4)[3N + sum_{i != j}(2 P_ij - 1)] = (1/4)[3N - N(N-1)] + sum_{i<j} P_ij
  const int n = psi.n_qubits();
  StateVector out = sum_of_swaps(psi);
  const double diag = 0.25 * (3.0 * n - n * (n - 1.0));
  for (std::size_t x = 0; x < psi.dim(); ++x) out[x] += diag * psi[x];
  return out;
}

StateVector apply_total_sz(const StateVector& psi) {
  const int n = psi.n_qubits();
  StateVector out = psi;
  for (std::size_t x = 0; x < psi.dim(); ++x) {
    out[x] *= 0.5 * (n - 2 * std::popcount(x));
  }
  return out;
}

StateVector apply_s_minus(const StateVector& psi) {
  const int n = psi.n_qubits();
  StateVector out(n);
  out[0] = 0.0;
  for (std::size_t x = 0; x < psi.dim(); ++x) {
    for (int i = 0; i < n; ++i) {
      const std::size_t b = std::size_t{1} << i;
      if (!(x & b)) out[x | b] += psi[x];
    }
  }
  return out;
}

double total_spin_sq(const StateVector& psi) {
  return expectation(psi, apply_total_spin_sq(psi));
}

double total_sz(const StateVector& psi) {
  return expectation(psi, apply_total_sz(psi));
}

int down_spins_for_sz(int n_sites, double s_z) {
  const double downs = 0.5 * n_sites - s_z;
  const long rounded = std::lround(downs);
  if (std::abs(downs - rounded) > 1e-9 || rounded < 0 || rounded > n_sites) {
    throw std::invalid_argument("no basis state has this S_z");
  }
  return static_cast<int>(rounded);
}

}  // namespace savqe
