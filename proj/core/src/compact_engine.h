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

#include <Eigen/Dense>

#include "savqe/ansatz.h"
#include "savqe/state_vector.h"
#include "savqe/vqe.h"

namespace savqe::detail {

using RowMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Kernels on the span of basis states with a fixed number of down spins.
///
/// Rows of a RowMatrix are basis states, columns are independent vectors, so
/// gates and translations touch contiguous rows.
class CompactEngine {
 public:
  CompactEngine(int n_qubits, int n_down);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(states_.size()); }

  /// Drops amplitudes outside the subspace.
  Eigen::VectorXcd compress(const StateVector& state) const;
  StateVector expand(const Eigen::VectorXcd& v) const;

  /// exp(-i theta P_link / 2) on the first `cols` columns of m.
  void apply_eswap(RowMatrix& m, Eigen::Index cols, int link, double theta) const;
  void apply_eswap(Eigen::VectorXcd& v, int link, double theta) const;
  /// P_link v.
  Eigen::VectorXcd apply_swap(const Eigen::VectorXcd& v, int link) const;

  /// (1/N) sum_n conj(chi(T^n)) T^n applied to every column.
  Eigen::VectorXcd project(const Eigen::VectorXcd& v,
                           const MomentumSector& sector) const;

  /// Rows of P m at one representative per translation orbit. A vector in a
  /// momentum sector is fixed by these rows up to phases, so
  /// <P a|P b> = sum_r orbit_length[r] conj((P a)_r) (P b)_r.
  RowMatrix project_reps(const RowMatrix& m, const MomentumSector& sector) const;
  Eigen::VectorXcd gather_reps(const Eigen::VectorXcd& v) const;
  const Eigen::VectorXd& orbit_lengths() const { return orbit_len_; }

  /// Heisenberg ring Hamiltonian.
  Eigen::VectorXcd apply_h(const Eigen::VectorXcd& v, double coupling) const;

 private:
  struct LinkTable {
    std::vector<std::pair<std::int32_t, std::int32_t>> pairs;  // anti-aligned
    std::vector<std::int32_t> aligned;
  };

  int n_qubits_;
  std::vector<std::uint32_t> states_;
  std::vector<LinkTable> links_;
  // translation_src_[n-1][k]: row of T^{-n}(state k), so (T^n v)[k] = v[src].
  std::vector<std::vector<std::int32_t>> translation_src_;
  std::vector<std::int32_t> reps_;
  Eigen::VectorXd orbit_len_;
};

}  // namespace savqe::detail
