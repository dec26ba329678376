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
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "savqe/hamiltonian.h"
#include "savqe/state_vector.h"

namespace savqe {

/// Symmetry sector for the exact solver: momentum index and S_z.
struct SpectrumSector {
  int q_index;
  double s_z;
};

struct SpectrumResult {
  double energy;
  StateVector eigenvector;
  std::optional<int> q_index;
  std::optional<double> s_z;
  /// <S^2> and <T> of the eigenvector; used instead of hard labels when the
  /// level is degenerate.
  double s_squared;
  cplx translation_expectation;
  double residual;
  int iterations;
};

struct LanczosOptions {
  int max_iterations = 500;
  double tolerance = 1e-8;
  int reproject_every = 10;
  std::uint64_t seed = 12345;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lowest eigenpair by Lanczos with full reorthogonalization. With a sector,
/// the start vector is a random vector restricted to the S_z subspace and
/// projected onto momentum q; both commute with H. Throws ConvergenceError
/// when the residual stays above tolerance after max_iterations, and
/// std::invalid_argument when the sector is empty.
SpectrumResult lanczos_ground(const HeisenbergRing& model,
                              std::optional<SpectrumSector> sector = {},
                              const LanczosOptions& options = {});

/// Lowest S = 1 level with momentum index q_index, returned as its S_z = 0
/// member. Lanczos runs in the (q, S_z = 1) sector with every Krylov vector
/// also projected onto S = 1; S^- then lowers the result. Empty when the
/// sector holds no triplet, e.g. N = 4, q = 0.
std::optional<SpectrumResult> lowest_triplet(const HeisenbergRing& model,
                                             int q_index,
                                             const LanczosOptions& options = {});

/// Writes "q_index,s_z,energy_over_J,s_squared" rows.
void write_spectrum_csv(std::ostream& os,
                        const std::vector<SpectrumResult>& results,
                        double coupling);

}  // namespace savqe
