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

#include "savqe/symmetry.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace savqe {
namespace {

std::uint64_t rotate_bits(std::uint64_t x, int n, int width) {
  if (n == 0) return x;
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  return ((x << n) | (x >> (width - n))) & mask;
}

int wrap(int n, int size) {
  const int r = n % size;
  return r < 0 ? r + size : r;
}

}  // namespace

CyclicGroup::CyclicGroup(int n_sites) : n_sites_(n_sites) {
  if (n_sites < 2) throw std::invalid_argument("ring needs at least 2 sites");
}

Permutation CyclicGroup::translation(int n) const {
  if (n < 1 || n > n_sites_) {
    throw std::invalid_argument("translation power " + std::to_string(n) +
                                " outside [1, " + std::to_string(n_sites_) +
                                "]");
  }
  std::vector<int> image(n_sites_);
  for (int i = 0; i < n_sites_; ++i) image[i] = (i + n) % n_sites_;
  return Permutation(std::move(image));
}

Permutation translation_perm(const CyclicGroup& group, int n) {
  return group.translation(n);
}

MomentumSector::MomentumSector(int n_sites, int m) : n_sites_(n_sites), m_(m) {
  if (n_sites < 2) throw std::invalid_argument("ring needs at least 2 sites");
  if (2 * m <= -n_sites || 2 * m > n_sites) {
    throw std::invalid_argument("momentum index " + std::to_string(m) +
                                " outside (-N/2, N/2] for N = " +
                                std::to_string(n_sites));
  }
}

double MomentumSector::q() const {
  return 2.0 * std::numbers::pi * m_ / n_sites_;
}

cplx MomentumSector::character(int n) const {
  // Reduce m*n modulo N first so that chi(T^N) is exactly 1.
  const int k = wrap(m_ * n, n_sites_);
  if (k == 0) return 1.0;
  if (2 * k == n_sites_) return -1.0;
  if (4 * k == n_sites_) return cplx{0.0, 1.0};
  if (4 * k == 3 * n_sites_) return cplx{0.0, -1.0};
  const double phase = 2.0 * std::numbers::pi * k / n_sites_;
  return {std::cos(phase), std::sin(phase)};
}

cplx character(const MomentumSector& sector, int n) {
  return sector.character(n);
}

std::vector<int> momentum_labels(int n_sites) {
  std::vector<int> labels;
  for (int m = -n_sites / 2; m <= n_sites / 2; ++m) {
    if (2 * m > -n_sites && 2 * m <= n_sites) labels.push_back(m);
  }
  return labels;
}

StateVector translate(const StateVector& state, int n) {
  const int width = state.n_qubits();
  const int shift = wrap(n, width);
  StateVector out(width);
  out[0] = 0.0;
  for (std::size_t x = 0; x < state.dim(); ++x) {
    out[rotate_bits(x, shift, width)] = state[x];
  }
  return out;
}

StateVector project(const StateVector& state, const CyclicGroup& group,
                    const MomentumSector& sector) {
  const int width = state.n_qubits();
  if (width != group.n_sites() || width != sector.n_sites()) {
    throw std::invalid_argument("projector and state sizes differ");
  }
  StateVector out(width);
  out[0] = 0.0;
  const double inv_order = 1.0 / group.order();
  for (int n = 1; n <= group.order(); ++n) {
    const cplx w = std::conj(sector.character(n)) * inv_order;
    const int shift = n % width;
    for (std::size_t x = 0; x < state.dim(); ++x) {
      out[rotate_bits(x, shift, width)] += w * state[x];
    }
  }
  return out;
}

}  // namespace savqe
