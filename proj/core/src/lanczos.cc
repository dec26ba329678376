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

#include "savqe/lanczos.h"

#include <bit>
#include <cmath>
#include <iomanip>
#include <random>

#include <Eigen/Eigenvalues>

#include "savqe/symmetry.h"

namespace savqe {
namespace {

class SectorFilter {
 public:
  SectorFilter(int n_sites, std::optional<SpectrumSector> sector,
               bool triplet_only = false)
      : group_(n_sites), triplet_only_(triplet_only) {
    if (sector) {
      downs_ = down_spins_for_sz(n_sites, sector->s_z);
      momentum_.emplace(n_sites, sector->q_index);
    }
  }

  void apply(StateVector& v) const {
    if (!momentum_) return;
    for (std::size_t x = 0; x < v.dim(); ++x) {
      if (std::popcount(x) != downs_) v[x] = 0.0;
    }
    v = project(v, group_, *momentum_);
    if (triplet_only_) {
      // Lowdin projector onto S = 1: remove S = 2 .. N/2 one factor at a time.
      const int s_max = v.n_qubits() / 2;
      for (int s = 2; s <= s_max; ++s) {
        const double value = s * (s + 1.0);
        StateVector w = apply_total_spin_sq(v);
        auto wa = w.amplitudes();
        for (std::size_t i = 0; i < wa.size(); ++i) {
          wa[i] = (wa[i] - value * v[i]) / (2.0 - value);
        }
        v = std::move(w);
      }
    }
  }

 private:
  CyclicGroup group_;
  bool triplet_only_;
  std::optional<MomentumSector> momentum_;
  int downs_ = -1;
};

void orthogonalize(StateVector& w, const std::vector<StateVector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const StateVector& v : basis) {
      const cplx c = inner(v, w);
      auto wa = w.amplitudes();
      auto va = v.amplitudes();
      for (std::size_t i = 0; i < wa.size(); ++i) wa[i] -= c * va[i];
    }
  }
}

struct Eigenpair {
  StateVector vector;
  double value;
  double residual;
  int iterations;
};

// Lowest eigenpair of the Hermitian operator `op`, which must commute with
// the sector filter.
template <typename Op>
Eigenpair lowest_eigenpair(int n, const Op& op, const SectorFilter& filter,
                           const LanczosOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  StateVector start(n);
  for (std::size_t x = 0; x < start.dim(); ++x) start[x] = {gauss(rng), gauss(rng)};
  filter.apply(start);
  if (start.norm() < 1e-10) {
    throw std::invalid_argument("requested symmetry sector is empty");
  }
  start.normalize();

  std::vector<StateVector> basis;
  basis.push_back(std::move(start));
  std::vector<double> alpha;
  std::vector<double> beta;

  for (int j = 0; j < options.max_iterations; ++j) {
    StateVector w = op(basis[j]);
    const double a = inner(basis[j], w).real();
    alpha.push_back(a);
    orthogonalize(w, basis);
    if (options.reproject_every > 0 && (j + 1) % options.reproject_every == 0) {
      filter.apply(w);
      orthogonalize(w, basis);
    }
    const double b = w.norm();

    const int m = j + 1;
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub(std::max(m - 1, 0));
    for (int k = 0; k + 1 < m; ++k) sub[k] = beta[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const Eigen::VectorXd y = tri.eigenvectors().col(0);
    const double estimate = b * std::abs(y[m - 1]);
    const bool exhausted = b < 1e-12;

    if (estimate <= options.tolerance || exhausted) {
      StateVector v(n);
      v[0] = 0.0;
      for (int k = 0; k < m; ++k) {
        const auto src = basis[k].amplitudes();
        auto dst = v.amplitudes();
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += y[k] * src[i];
      }
      v.normalize();
      const StateVector ov = op(v);
      const double e = inner(v, ov).real();
      StateVector r = ov;
      auto ra = r.amplitudes();
      for (std::size_t i = 0; i < ra.size(); ++i) ra[i] -= e * v[i];
      const double residual = r.norm();
      if (residual <= options.tolerance || exhausted) {
        if (residual > options.tolerance) {
          throw ConvergenceError("Lanczos space exhausted above tolerance");
        }
        return {std::move(v), e, residual, m};
      }
    }
    w *= 1.0 / b;
    beta.push_back(b);
    basis.push_back(std::move(w));
  }
  throw ConvergenceError("Lanczos did not converge in " +
                         std::to_string(options.max_iterations) +
                         " iterations");
}

SpectrumResult to_result(const HeisenbergRing& model, Eigenpair pair,
                         std::optional<SpectrumSector> sector) {
  const StateVector hv = apply_h(model, pair.vector);
  const double e = inner(pair.vector, hv).real();
  SpectrumResult out{e, std::move(pair.vector), std::nullopt, std::nullopt,
                     0.0, 0.0, pair.residual, pair.iterations};
  if (sector) {
    out.q_index = sector->q_index;
    out.s_z = sector->s_z;
  }
  out.s_squared = total_spin_sq(out.eigenvector);
  out.translation_expectation = inner(out.eigenvector, translate(out.eigenvector, 1));
  return out;
}

}  // namespace

SpectrumResult lanczos_ground(const HeisenbergRing& model,
                              std::optional<SpectrumSector> sector,
                              const LanczosOptions& options) {
  const int n = model.n_sites();
  if (n > 20) throw std::invalid_argument("lanczos_ground supports N <= 20");
  const SectorFilter filter(n, sector);
  const auto h = [&](const StateVector& v) { return apply_h(model, v); };
  return to_result(model, lowest_eigenpair(n, h, filter, options), sector);
}

std::optional<SpectrumResult> lowest_triplet(const HeisenbergRing& model,
                                             int q_index,
                                             const LanczosOptions& options) {
  const int n = model.n_sites();
  if (n > 20) throw std::invalid_argument("lowest_triplet supports N <= 20");
  const SpectrumSector sector{q_index, 1.0};
  const SectorFilter filter(n, sector, /*triplet_only=*/true);
  const auto h = [&](const StateVector& v) { return apply_h(model, v); };
  std::optional<SpectrumResult> r;
  try {
    r = to_result(model, lowest_eigenpair(n, h, filter, options), sector);
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // no S = 1 state with this momentum
  }
  if (std::abs(r->s_squared - 2.0) > 1e-6) return std::nullopt;
  r->eigenvector = apply_s_minus(r->eigenvector);
  r->eigenvector.normalize();
  r->s_z = 0.0;
  r->translation_expectation = inner(r->eigenvector, translate(r->eigenvector, 1));
  return r;
}

void write_spectrum_csv(std::ostream& os,
                        const std::vector<SpectrumResult>& results,
                        double coupling) {
  os << "q_index,s_z,energy_over_J,s_squared\n";
  os << std::setprecision(12);
  for (const SpectrumResult& r : results) {
    if (r.q_index) os << *r.q_index;
    os << ',';
    if (r.s_z) os << *r.s_z;
    os << ',' << r.energy / coupling << ',' << r.s_squared << '\n';
  }
}

}  // namespace savqe
