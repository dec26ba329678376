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

#include "savqe/state_vector.h"

namespace savqe {

/// Antiferromagnetic Heisenberg model on an N-site periodic ring,
/// H = (J/4) sum_<ij> (XX + YY + ZZ) = (J/2) sum_<ij> (P_ij - 1/2).
class HeisenbergRing {
 public:
  explicit HeisenbergRing(int n_sites, double coupling = 1.0);

  int n_sites() const { return n_sites_; }
  double coupling() const { return coupling_; }

  /// Ring bond k joins sites (k, k+1 mod N). For N = 2 the single pair is
  /// counted once.
  int n_bonds() const { return n_sites_ == 2 ? 1 : n_sites_; }

 private:
  int n_sites_;
  double coupling_;
};

/// H|psi> through the SWAP form.
StateVector apply_h(const HeisenbergRing& model, const StateVector& psi);

/// <psi|H|psi> for a normalized state. Throws std::invalid_argument when
/// |psi| deviates from 1 by more than 1e-10.
double energy(const HeisenbergRing& model, const StateVector& psi);

/// S^2 |psi> with S^2 = (1/4) sum_ij (X_i X_j + Y_i Y_j + Z_i Z_j).
StateVector apply_total_spin_sq(const StateVector& psi);
/// S_z |psi> with S_z = (1/2) sum_i Z_i; |0> carries S_z = +1/2.
StateVector apply_total_sz(const StateVector& psi);
/// S^- |psi>, lowering S_z by one.
StateVector apply_s_minus(const StateVector& psi);

double total_spin_sq(const StateVector& psi);
double total_sz(const StateVector& psi);

/// Number of set bits (down spins) of basis states with the given S_z.
/// Throws std::invalid_argument when no basis state has that S_z.
int down_spins_for_sz(int n_sites, double s_z);

}  // namespace savqe
