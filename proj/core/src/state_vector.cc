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

#include "savqe/state_vector.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace savqe {
namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n_qubits) +
                                " outside [1, " + std::to_string(kMaxQubits) +
                                "]");
  }
}

void check_same_size(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("state size mismatch: " +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()) + " qubits");
  }
}

// Amplitude of a pair state for bit values (b_first, b_second).
cplx pair_amplitude(PairKind kind, int b_first, int b_second) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case PairKind::kSinglet:
      if (b_first == 0 && b_second == 1) return h;
      if (b_first == 1 && b_second == 0) return -h;
      return 0.0;
    case PairKind::kTriplet0:
      return b_first != b_second ? h : 0.0;
    case PairKind::kTripletUp:
      return (b_first == 0 && b_second == 0) ? 1.0 : 0.0;
    case PairKind::kTripletDown:
      return (b_first == 1 && b_second == 1) ? 1.0 : 0.0;
  }
  return 0.0;
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("amplitude count must equal 2^n_qubits");
  }
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const cplx& a : amplitudes_) s += std::norm(a);
  return s;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector& StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  for (cplx& a : amplitudes_) a /= n;
  return *this;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  check_same_size(*this, other);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    amplitudes_[i] += other.amplitudes_[i];
  }
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  check_same_size(*this, other);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    amplitudes_[i] -= other.amplitudes_[i];
  }
  return *this;
}

StateVector& StateVector::operator*=(cplx factor) {
  for (cplx& a : amplitudes_) a *= factor;
  return *this;
}

StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
StateVector operator*(cplx factor, StateVector a) { return a *= factor; }

cplx inner(const StateVector& a, const StateVector& b) {
  check_same_size(a, b);
  cplx s{0.0, 0.0};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  check_same_size(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  return std::abs(std::abs(inner(a, b)) - a.norm() * b.norm()) <= tol;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b)) / (a.norm_squared() * b.norm_squared());
}

StateVector basis_state(int n_qubits, std::string_view bits) {
  check_qubit_count(n_qubits);
  if (bits.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("bit string length must equal qubit count");
  }
  std::uint64_t index = 0;
  for (int k = 0; k < n_qubits; ++k) {
    if (bits[k] == '1') {
      index |= std::uint64_t{1} << k;
    } else if (bits[k] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return basis_state(n_qubits, index);
}

StateVector basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw std::invalid_argument("basis index out of range");
  s[0] = 0.0;
  s[index] = 1.0;
  return s;
}

StateVector pair_product(int n_qubits, std::span<const QubitPair> pairs) {
  check_qubit_count(n_qubits);
  std::vector<int> seen(n_qubits, 0);
  for (const QubitPair& p : pairs) {
    if (p.first < 0 || p.first >= n_qubits || p.second < 0 ||
        p.second >= n_qubits || p.first == p.second) {
      throw std::invalid_argument("invalid qubit pair");
    }
    ++seen[p.first];
    ++seen[p.second];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    throw std::invalid_argument("pairs must cover every qubit exactly once");
  }

  std::vector<cplx> amps(std::size_t{1} << n_qubits);
  for (std::size_t x = 0; x < amps.size(); ++x) {
    cplx a = 1.0;
    for (const QubitPair& p : pairs) {
      a *= pair_amplitude(p.kind, (x >> p.first) & 1, (x >> p.second) & 1);
      if (a == 0.0) break;
    }
    amps[x] = a;
  }
  return StateVector(n_qubits, std::move(amps));
}

StateVector singlet_product(int n_qubits) {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    throw std::invalid_argument("singlet product needs an even qubit count");
  }
  std::vector<QubitPair> pairs;
  for (int i = 0; i < n_qubits; i += 2) pairs.push_back({i, i + 1});
  return pair_product(n_qubits, pairs);
}

StateVector triplet_tail_product(int n_qubits) {
  if (n_qubits < 4 || n_qubits % 2 != 0) {
    throw std::invalid_argument(
        "triplet-tail product needs an even qubit count >= 4");
  }
  std::vector<QubitPair> pairs;
  for (int i = 0; i < n_qubits; i += 2) pairs.push_back({i, i + 1});
  pairs.back().kind = PairKind::kTriplet0;
  return pair_product(n_qubits, pairs);
}

}  // namespace savqe
