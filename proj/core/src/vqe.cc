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

#include "savqe/vqe.h"

#include <cmath>
#include <numbers>
#include <string>

#include "compact_engine.h"

namespace savqe {
namespace {

constexpr cplx kMinusHalfI{0.0, -0.5};

void check_sizes(const Ansatz& ansatz, const Params& params,
                 const SectorSpec& spec) {
  if (static_cast<int>(params.size()) != ansatz.n_params()) {
    throw std::invalid_argument("parameter count does not match ansatz");
  }
  if (spec.group.n_sites() != ansatz.n_qubits()) {
    throw std::invalid_argument("sector spec and ansatz sizes differ");
  }
}

StateVector apply_projector(const StateVector& psi, const SectorSpec& spec) {
  if (!spec.sector) return psi;
  return project(psi, spec.group, *spec.sector);
}

double checked_norm(const StateVector& psi, const StateVector& p_psi) {
  const double norm = inner(psi, p_psi).real();
  if (!(norm > kNormFloor)) {
    throw NormFloorError("projected norm " + std::to_string(norm) +
                         " is below the floor; the sector does not overlap "
                         "this trial state");
  }
  return norm;
}

}  // namespace

StateVector reference_state(int n_qubits, Reference reference) {
  switch (reference) {
    case Reference::kSingletProduct:
      return singlet_product(n_qubits);
    case Reference::kTripletTail:
      return triplet_tail_product(n_qubits);
  }
  throw std::invalid_argument("unknown reference");
}

SectorSpec SectorSpec::symmetrized(int n_sites, int q_index,
                                   Reference reference) {
  return SectorSpec{CyclicGroup(n_sites), MomentumSector(n_sites, q_index),
                    reference};
}

SectorSpec SectorSpec::unsymmetrized(int n_sites, Reference reference) {
  return SectorSpec{CyclicGroup(n_sites), std::nullopt, reference};
}

StateVector trial_state(const Ansatz& ansatz, const Params& params,
                        const SectorSpec& spec) {
  check_sizes(ansatz, params, spec);
  return apply_circuit(reference_state(ansatz.n_qubits(), spec.reference),
                       ansatz.circuit(params.theta));
}

StateVector projected_state(const Ansatz& ansatz, const Params& params,
                            const SectorSpec& spec) {
  return apply_projector(trial_state(ansatz, params, spec), spec);
}

ProjectedEnergy projected_energy(const Ansatz& ansatz, const Params& params,
                                 const SectorSpec& spec,
                                 const HeisenbergRing& model) {
  const StateVector psi = trial_state(ansatz, params, spec);
  const StateVector p_psi = apply_projector(psi, spec);
  const double norm = checked_norm(psi, p_psi);
  const cplx num = inner(psi, apply_h(model, p_psi));
  if (std::abs(num.imag()) > 1e-9 * std::max(1.0, std::abs(num.real()))) {
    throw std::logic_error("projected energy has an imaginary part");
  }
  return {num.real() / norm, norm};
}

StateVector shifted_state(const Ansatz& ansatz, const Params& params, int i,
                          const SectorSpec& spec) {
  if (i < 0 || i >= ansatz.n_params()) {
    throw std::invalid_argument("parameter index out of range");
  }
  Params shifted = params;
  shifted[i] += std::numbers::pi;
  StateVector s = trial_state(ansatz, shifted, spec);
  s *= 0.5;
  return s;
}

std::vector<cplx> berry_a(const Ansatz& ansatz, const Params& params,
                          const SectorSpec& spec) {
  const StateVector psi = trial_state(ansatz, params, spec);
  const StateVector p_psi = apply_projector(psi, spec);
  const double norm = checked_norm(psi, p_psi);
  std::vector<cplx> a(ansatz.n_params());
  for (int i = 0; i < ansatz.n_params(); ++i) {
    a[i] = inner(p_psi, shifted_state(ansatz, params, i, spec)) / norm;
  }
  return a;
}

std::vector<double> energy_gradient(const Ansatz& ansatz, const Params& params,
                                    const SectorSpec& spec,
                                    const HeisenbergRing& model) {
  const StateVector psi = trial_state(ansatz, params, spec);
  const StateVector p_psi = apply_projector(psi, spec);
  const double norm = checked_norm(psi, p_psi);
  const StateVector hp_psi = apply_h(model, p_psi);
  const double e = inner(psi, hp_psi).real() / norm;
  std::vector<double> grad(ansatz.n_params());
  for (int i = 0; i < ansatz.n_params(); ++i) {
    const StateVector d = shifted_state(ansatz, params, i, spec);
    const cplx a = inner(p_psi, d) / norm;
    grad[i] = 2.0 * (inner(hp_psi, d) / norm - a * e).real();
  }
  return grad;
}

Eigen::MatrixXcd metric_tensor(const Ansatz& ansatz, const Params& params,
                               const SectorSpec& spec) {
  const StateVector psi = trial_state(ansatz, params, spec);
  const StateVector p_psi = apply_projector(psi, spec);
  const double norm = checked_norm(psi, p_psi);
  const int p = ansatz.n_params();
  std::vector<StateVector> d;
  std::vector<StateVector> pd;
  std::vector<cplx> a(p);
  for (int i = 0; i < p; ++i) {
    d.push_back(shifted_state(ansatz, params, i, spec));
    pd.push_back(apply_projector(d.back(), spec));
    a[i] = inner(p_psi, d.back()) / norm;
  }
  Eigen::MatrixXcd g(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      g(i, j) = inner(d[i], pd[j]) / norm - std::conj(a[i]) * a[j];
    }
  }
  return g;
}

// ---------------------------------------------------------------------------

VariationalProblem::VariationalProblem(Ansatz ansatz, SectorSpec spec,
                                       HeisenbergRing model)
    : ansatz_(std::move(ansatz)), spec_(std::move(spec)), model_(model) {
  if (spec_.group.n_sites() != ansatz_.n_qubits() ||
      model_.n_sites() != ansatz_.n_qubits()) {
    throw std::invalid_argument("ansatz, sector and model sizes differ");
  }
  // Both references have S_z = 0, i.e. N/2 down spins.
  engine_ = std::make_shared<detail::CompactEngine>(ansatz_.n_qubits(),
                                                    ansatz_.n_qubits() / 2);
}

void VariationalProblem::set_target(const StateVector& target) {
  Eigen::VectorXcd t = engine_->compress(target);
  const double full = target.norm();
  if (full == 0.0) throw std::invalid_argument("zero target state");
  t /= full;
  target_ = std::make_shared<const Eigen::VectorXcd>(std::move(t));
}

Evaluation VariationalProblem::evaluate(const Params& params) const {
  check_sizes(ansatz_, params, spec_);
  const detail::CompactEngine& eng = *engine_;
  const auto& gates = ansatz_.gates();
  const Eigen::Index p = static_cast<Eigen::Index>(gates.size());

  // Forward sweep. Column t of `deriv` holds the derivative state for the
  // t-th gate in circuit order: since U_t = exp(-i theta P_t/2) commutes with
  // P_t, d_t Psi = U_>t (-i/2) P_t U_<=t |ref>.
  Eigen::VectorXcd psi = eng.compress(reference_state(ansatz_.n_qubits(), spec_.reference));
  detail::RowMatrix deriv(eng.dim(), p);
  for (Eigen::Index t = 0; t < p; ++t) {
    const auto& g = gates[t];
    const double theta = params[g.param];
    eng.apply_eswap(psi, g.first, theta);
    eng.apply_eswap(deriv, t, g.first, theta);
    deriv.col(t) = kMinusHalfI * eng.apply_swap(psi, g.first);
  }

  const Eigen::VectorXcd p_psi =
      spec_.sector ? eng.project(psi, *spec_.sector) : psi;
  const double norm = psi.dot(p_psi).real();
  if (!(norm > kNormFloor)) {
    throw NormFloorError("projected norm " + std::to_string(norm) +
                         " is below the floor; the sector does not overlap "
                         "this trial state");
  }
  const Eigen::VectorXcd hp_psi = eng.apply_h(p_psi, model_.coupling());
  const double e = psi.dot(hp_psi).real() / norm;

  // With a sector, every overlap below is between vectors of that sector, so
  // it reduces to a weighted sum over orbit representatives:
  // <d_s|P|d_t> = <P d_s|P d_t>, <Ppsi|d_t> = <Ppsi|P d_t>, same for H Ppsi.
  Eigen::VectorXcd a_t;
  Eigen::VectorXcd h_t;
  Eigen::MatrixXcd g_t = Eigen::MatrixXcd::Zero(p, p);
  if (spec_.sector) {
    detail::RowMatrix pd = eng.project_reps(deriv, *spec_.sector);
    const Eigen::VectorXd& w = eng.orbit_lengths();
    const Eigen::VectorXcd wp = w.cwiseProduct(eng.gather_reps(p_psi));
    const Eigen::VectorXcd wh = w.cwiseProduct(eng.gather_reps(hp_psi));
    a_t = (pd.adjoint() * wp).conjugate() / norm;
    h_t = (pd.adjoint() * wh).conjugate() / norm;
    pd = w.cwiseSqrt().asDiagonal() * pd;
    g_t.selfadjointView<Eigen::Lower>().rankUpdate(pd.adjoint());
  } else {
    a_t = (deriv.adjoint() * p_psi).conjugate() / norm;
    h_t = (deriv.adjoint() * hp_psi).conjugate() / norm;
    g_t.selfadjointView<Eigen::Lower>().rankUpdate(deriv.adjoint());
  }
  g_t.triangularView<Eigen::StrictlyUpper>() = g_t.adjoint();
  g_t /= norm;
  g_t.noalias() -= a_t.conjugate() * a_t.transpose();

  Evaluation out;
  out.energy = e;
  out.norm = norm;
  if (target_) out.fidelity = std::norm(target_->dot(p_psi)) / norm;
  out.berry.resize(p);
  out.gradient.resize(p);
  out.metric.resize(p, p);
  for (Eigen::Index t = 0; t < p; ++t) {
    const int i = gates[t].param;
    out.berry[i] = a_t[t];
    out.gradient[i] = 2.0 * (h_t[t] - a_t[t] * e).real();
    for (Eigen::Index s = 0; s < p; ++s) {
      out.metric(i, gates[s].param) = g_t(t, s);
    }
  }
  return out;
}

StateVector VariationalProblem::symmetrized_state(const Params& params) const {
  check_sizes(ansatz_, params, spec_);
  const detail::CompactEngine& eng = *engine_;
  Eigen::VectorXcd psi = eng.compress(reference_state(ansatz_.n_qubits(), spec_.reference));
  for (const auto& g : ansatz_.gates()) eng.apply_eswap(psi, g.first, params[g.param]);
  if (spec_.sector) psi = eng.project(psi, *spec_.sector);
  const double n = psi.norm();
  if (!(n * n > kNormFloor)) throw NormFloorError("projected norm below floor");
  return eng.expand(psi / n);
}

}  // namespace savqe
