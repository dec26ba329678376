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

// Independent dense-matrix references for the tests. Nothing here calls the
// kernels under test: operators are assembled from Kronecker products of
// Pauli matrices or from explicit index maps.

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "savqe/state_vector.h"

namespace savqe::oracle {

using Dense = Eigen::MatrixXcd;

inline Eigen::VectorXcd to_vec(const StateVector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v[static_cast<Eigen::Index>(i)] = s[i];
  return v;
}

inline StateVector from_vec(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(std::log2(static_cast<double>(v.size())) + 0.5);
  StateVector s(n);
  for (Eigen::Index i = 0; i < v.size(); ++i) s[static_cast<std::size_t>(i)] = v[i];
  return s;
}

inline Eigen::Matrix2cd pauli(char which) {
  Eigen::Matrix2cd m;
  const cplx i{0.0, 1.0};
  switch (which) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m.setIdentity();
  }
  return m;
}

/// Operator acting with `local` on qubit q of n. Qubit q is bit q of the
/// basis index, so it is the q-th factor counted from the right.
inline Dense embed(int n, int q, const Eigen::Matrix2cd& local) {
  Dense out = Dense::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    const Eigen::Matrix2cd f = k == q ? local : Eigen::Matrix2cd::Identity();
    Dense next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block(2 * r, 2 * c, 2, 2) = out(r, c) * f;
      }
    }
    out = std::move(next);
  }
  return out;
}

/// H = (J/4) sum_i (X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}) on the ring.
inline Dense heisenberg(int n, double coupling = 1.0) {
  const auto dim = Eigen::Index{1} << n;
  Dense h = Dense::Zero(dim, dim);
  const int bonds = n == 2 ? 1 : n;
  for (int b = 0; b < bonds; ++b) {
    for (const char p : {'X', 'Y', 'Z'}) {
      h += embed(n, b, pauli(p)) * embed(n, (b + 1) % n, pauli(p));
    }
  }
  return 0.25 * coupling * h;
}

/// S^2 = (1/4) sum_{i,j} sigma_i . sigma_j.
inline Dense spin_sq(int n) {
  const auto dim = Eigen::Index{1} << n;
  Dense s = Dense::Zero(dim, dim);
  for (const char p : {'X', 'Y', 'Z'}) {
    Dense total = Dense::Zero(dim, dim);
    for (int i = 0; i < n; ++i) total += embed(n, i, pauli(p));
    s += total * total;
  }
  return 0.25 * s;
}

inline Dense spin_z(int n) {
  const auto dim = Eigen::Index{1} << n;
  Dense s = Dense::Zero(dim, dim);
  for (int i = 0; i < n; ++i) s += embed(n, i, pauli('Z'));
  return 0.5 * s;
}

/// One-site translation: the content of site i moves to site i+1 mod n.
inline Dense translation(int n) {
  const auto dim = Eigen::Index{1} << n;
  Dense t = Dense::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    Eigen::Index y = 0;
    for (int i = 0; i < n; ++i) {
      if ((x >> i) & 1) y |= Eigen::Index{1} << ((i + 1) % n);
    }
    t(y, x) = 1.0;
  }
  return t;
}

/// (1/n) sum_{k=1..n} exp(-i q k) T^k with q = 2 pi m / n.
inline Dense projector(int n, int m) {
  const Dense t = translation(n);
  const auto dim = Eigen::Index{1} << n;
  Dense p = Dense::Zero(dim, dim);
  Dense tk = Dense::Identity(dim, dim);
  for (int k = 1; k <= n; ++k) {
    tk = t * tk;
    p += std::polar(1.0, -2.0 * M_PI * m * k / n) * tk;
  }
  return p / static_cast<double>(n);
}

/// Dense two-site eSWAP exp(-i theta P_ij / 2).
inline Dense eswap(int n, int i, int j, double theta) {
  const auto dim = Eigen::Index{1} << n;
  Dense swap = Dense::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const bool bi = (x >> i) & 1;
    const bool bj = (x >> j) & 1;
    Eigen::Index y = x;
    if (bi != bj) y ^= (Eigen::Index{1} << i) | (Eigen::Index{1} << j);
    swap(y, x) = 1.0;
  }
  return std::cos(theta / 2) * Dense::Identity(dim, dim) -
         cplx{0.0, std::sin(theta / 2)} * swap;
}

inline StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  StateVector s(n);
  for (std::size_t x = 0; x < s.dim(); ++x) s[x] = {g(rng), g(rng)};
  s.normalize();
  return s;
}

}  // namespace savqe::oracle
