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

#include <string>
#include <utility>
#include <vector>

#include "savqe/ansatz.h"
#include "savqe/permutation.h"

namespace savqe {

/// Ordered nearest-neighbour transpositions on a ring of n_sites qubits.
class SwapNetwork {
 public:
  using Transposition = std::pair<int, int>;

  SwapNetwork(int n_sites, std::vector<Transposition> transpositions);

  int n_sites() const { return n_sites_; }
  int n_swaps() const { return static_cast<int>(transpositions_.size()); }
  const std::vector<Transposition>& transpositions() const {
    return transpositions_;
  }

  /// Greedy left-packed time steps: each transposition lands one step after
  /// the latest earlier transposition sharing a site with it.
  const std::vector<std::vector<Transposition>>& layers() const {
    return layers_;
  }
  int depth() const { return static_cast<int>(layers_.size()); }

  /// Permutation realized by applying the transpositions in order.
  Permutation composed() const;

  /// "swap i j" per line, time steps separated by a blank line.
  std::string to_listing() const;
  static SwapNetwork parse_listing(int n_sites, const std::string& text);

 private:
  int n_sites_;
  std::vector<Transposition> transpositions_;
  std::vector<std::vector<Transposition>> layers_;
};

/// Ghost-leg construction: odd-even transposition sort of the destination
/// sequence, one adjacent transposition per exchange. The result uses the
/// minimal number of adjacent transpositions (the inversion count).
SwapNetwork amida_decompose(const Permutation& target);

/// Long-range exchange of sites 1 and r (the second site and the one r
/// places further, 0-based).
Permutation long_range_swap(int n_sites, int r);

struct SwapCount {
  int n_swap;
  int depth;
  int layers;
};

/// Closed-form cost of long_range_swap(r): 2r-3 swaps, r-1 time steps,
/// ceil(r/2 - 1/2) ansatz layers. r must be even and >= 2.
SwapCount swap_count_bound(int r);

struct SwapEmbedding {
  Params params;
  int layers_used;
  /// Global phase: U(theta) = phase * (permutation operator).
  cplx phase;
};

/// Angles of pi on the ansatz links used by the network (0 elsewhere) so the
/// ansatz circuit realizes the network's permutation up to a global phase.
/// Throws std::invalid_argument when the ansatz has too few layers.
SwapEmbedding theta_swap_params(const Ansatz& ansatz,
                                const SwapNetwork& network);

}  // namespace savqe
