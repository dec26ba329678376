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
#include <vector>

#include "savqe/permutation.h"
#include "savqe/state_vector.h"

namespace savqe {

/// Translations {T^1, ..., T^N} of an N-site ring.
class CyclicGroup {
 public:
  explicit CyclicGroup(int n_sites);

  int n_sites() const { return n_sites_; }
  int order() const { return n_sites_; }

  /// T^n for 1 <= n <= N: the state at site i moves to site (i + n) mod N.
  Permutation translation(int n) const;

 private:
  int n_sites_;
};

Permutation translation_perm(const CyclicGroup& group, int n);

/// One-dimensional irrep of the ring translations: momentum q = 2 pi m / N
/// with m in {-N/2 + 1, ..., N/2}.
class MomentumSector {
 public:
  MomentumSector(int n_sites, int m);

  int n_sites() const { return n_sites_; }
  int m() const { return m_; }
  double q() const;

  /// chi(T^n) = exp(i q n).
  cplx character(int n) const;

 private:
  int n_sites_;
  int m_;
};

cplx character(const MomentumSector& sector, int n);

/// Momentum labels m = -N/2 + 1, ..., N/2 in increasing order (N even), or
/// -(N-1)/2, ..., (N-1)/2 for odd N.
std::vector<int> momentum_labels(int n_sites);

/// T^n |psi> computed by rotating basis-index bits.
StateVector translate(const StateVector& state, int n);

/// P^(q)|psi> = (1/N) sum_n chi(T^n)^* T^n |psi>. Not normalized; its
/// squared norm is <psi|P^(q)|psi>.
StateVector project(const StateVector& state, const CyclicGroup& group,
                    const MomentumSector& sector);

}  // namespace savqe
