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

#include "compact_engine.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace savqe::detail {
namespace {

std::uint32_t rotate_bits(std::uint32_t x, int n, int width) {
  if (n == 0) return x;
  const std::uint32_t mask =
      width == 32 ? ~0u : ((std::uint32_t{1} << width) - 1);
  return ((x << n) | (x >> (width - n))) & mask;
}

}  // namespace

CompactEngine::CompactEngine(int n_qubits, int n_down) : n_qubits_(n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxQubits || n_down < 0 || n_down > n_qubits) {
    throw std::invalid_argument("bad compact subspace");
  }
  const std::uint32_t full = std::uint32_t{1} << n_qubits;
  std::vector<std::int32_t> index_of(full, -1);
  for (std::uint32_t x = 0; x < full; ++x) {
    if (std::popcount(x) == n_down) {
      index_of[x] = static_cast<std::int32_t>(states_.size());
      states_.push_back(x);
    }
  }

  links_.resize(n_qubits);
  for (int b = 0; b < n_qubits; ++b) {
    const std::uint32_t bi = std::uint32_t{1} << b;
    const std::uint32_t bj = std::uint32_t{1} << ((b + 1) % n_qubits);
    LinkTable& t = links_[b];
    for (std::size_t k = 0; k < states_.size(); ++k) {
      const std::uint32_t x = states_[k];
      const bool xi = x & bi;
      const bool xj = x & bj;
      if (xi == xj) {
        t.aligned.push_back(static_cast<std::int32_t>(k));
      } else if (!xi) {
        t.pairs.emplace_back(static_cast<std::int32_t>(k), index_of[x ^ bi ^ bj]);
      }
    }
  }

  translation_src_.resize(n_qubits);
  for (int n = 1; n <= n_qubits; ++n) {
    auto& src = translation_src_[n - 1];
    src.resize(states_.size());
    const int back = (n_qubits - n) % n_qubits;
    for (std::size_t k = 0; k < states_.size(); ++k) {
      src[k] = index_of[rotate_bits(states_[k], back, n_qubits)];
    }
  }

  // Orbit representative = smallest bit pattern among the rotations.
  std::vector<double> lengths;
  for (std::size_t k = 0; k < states_.size(); ++k) {
    const std::uint32_t x = states_[k];
    bool smallest = true;
    int period = n_qubits;
    for (int n = 1; n < n_qubits; ++n) {
      const std::uint32_t y = rotate_bits(x, n, n_qubits);
      if (y < x) {
        smallest = false;
        break;
      }
      if (y == x) {
        period = n;
        break;
      }
    }
    if (smallest) {
      reps_.push_back(static_cast<std::int32_t>(k));
      lengths.push_back(period);
    }
  }
  orbit_len_ = Eigen::Map<Eigen::VectorXd>(lengths.data(),
                                           static_cast<Eigen::Index>(lengths.size()));
}

Eigen::VectorXcd CompactEngine::compress(const StateVector& state) const {
  if (state.n_qubits() != n_qubits_) {
    throw std::invalid_argument("state size differs from compact space");
  }
  Eigen::VectorXcd v(dim());
  for (Eigen::Index k = 0; k < dim(); ++k) v[k] = state[states_[k]];
  return v;
}

StateVector CompactEngine::expand(const Eigen::VectorXcd& v) const {
  StateVector s(n_qubits_);
  s[0] = 0.0;
  for (Eigen::Index k = 0; k < dim(); ++k) s[states_[k]] = v[k];
  return s;
}

void CompactEngine::apply_eswap(RowMatrix& m, Eigen::Index cols, int link,
                                double theta) const {
  if (cols == 0) return;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const LinkTable& t = links_[link];
  const Eigen::Index stride = 2 * m.cols();
  const Eigen::Index width = 2 * cols;
  double* base = reinterpret_cast<double*>(m.data());
  // Aligned rows pick up e^{-i theta/2}.
  for (const std::int32_t k : t.aligned) {
    double* r = base + k * stride;
    for (Eigen::Index j = 0; j < width; j += 2) {
      const double re = r[j];
      const double im = r[j + 1];
      r[j] = c * re + s * im;
      r[j + 1] = c * im - s * re;
    }
  }
  // Anti-aligned pairs mix as [[c, -is], [-is, c]].
  for (const auto& [a, b] : t.pairs) {
    double* ra = base + a * stride;
    double* rb = base + b * stride;
    for (Eigen::Index j = 0; j < width; j += 2) {
      const double ar = ra[j];
      const double ai = ra[j + 1];
      const double br = rb[j];
      const double bi = rb[j + 1];
      ra[j] = c * ar + s * bi;
      ra[j + 1] = c * ai - s * br;
      rb[j] = c * br + s * ai;
      rb[j + 1] = c * bi - s * ar;
    }
  }
}

void CompactEngine::apply_eswap(Eigen::VectorXcd& v, int link,
                                double theta) const {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const cplx diag{c, -s};
  const cplx off{0.0, -s};
  const LinkTable& t = links_[link];
  for (const std::int32_t k : t.aligned) v[k] *= diag;
  for (const auto& [a, b] : t.pairs) {
    const cplx va = v[a];
    const cplx vb = v[b];
    v[a] = c * va + off * vb;
    v[b] = c * vb + off * va;
  }
}

Eigen::VectorXcd CompactEngine::apply_swap(const Eigen::VectorXcd& v,
                                           int link) const {
  Eigen::VectorXcd out = v;
  for (const auto& [a, b] : links_[link].pairs) std::swap(out[a], out[b]);
  return out;
}

Eigen::VectorXcd CompactEngine::project(const Eigen::VectorXcd& v,
                                        const MomentumSector& sector) const {
  const int order = n_qubits_;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (int n = 1; n <= order; ++n) {
    const cplx w = std::conj(sector.character(n)) / static_cast<double>(order);
    const auto& src = translation_src_[n - 1];
    for (Eigen::Index k = 0; k < dim(); ++k) out[k] += w * v[src[k]];
  }
  return out;
}

RowMatrix CompactEngine::project_reps(const RowMatrix& m,
                                      const MomentumSector& sector) const {
  const int order = n_qubits_;
  std::vector<double> wr(order);
  std::vector<double> wi(order);
  for (int n = 1; n <= order; ++n) {
    const cplx w = std::conj(sector.character(n)) / static_cast<double>(order);
    wr[n - 1] = w.real();
    wi[n - 1] = w.imag();
  }
  const auto n_reps = static_cast<Eigen::Index>(reps_.size());
  RowMatrix out = RowMatrix::Zero(n_reps, m.cols());
  const Eigen::Index width = 2 * m.cols();
  const double* in = reinterpret_cast<const double*>(m.data());
  double* dst = reinterpret_cast<double*>(out.data());
  for (Eigen::Index r = 0; r < n_reps; ++r) {
    double* o = dst + r * width;
    for (int n = 0; n < order; ++n) {
      const double* row = in + translation_src_[n][reps_[r]] * width;
      const double xr = wr[n];
      const double xi = wi[n];
      for (Eigen::Index j = 0; j < width; j += 2) {
        o[j] += xr * row[j] - xi * row[j + 1];
        o[j + 1] += xr * row[j + 1] + xi * row[j];
      }
    }
  }
  return out;
}

Eigen::VectorXcd CompactEngine::gather_reps(const Eigen::VectorXcd& v) const {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(reps_.size()));
  for (std::size_t r = 0; r < reps_.size(); ++r) out[r] = v[reps_[r]];
  return out;
}

Eigen::VectorXcd CompactEngine::apply_h(const Eigen::VectorXcd& v,
                                        double coupling) const {
  const double half_j = 0.5 * coupling;
  const double quarter_j = 0.25 * coupling;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (const LinkTable& t : links_) {
    for (const std::int32_t k : t.aligned) out[k] += quarter_j * v[k];
    for (const auto& [a, b] : t.pairs) {
      out[a] += half_j * v[b] - quarter_j * v[a];
      out[b] += half_j * v[a] - quarter_j * v[b];
    }
  }
  return out;
}

}  // namespace savqe::detail
