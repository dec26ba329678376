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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.h"
#include "savqe/hadamard_test.h"
#include "savqe/lanczos.h"
#include "savqe/vqe.h"

namespace savqe {
namespace {

constexpr double kPi = std::numbers::pi;

Params shifted(Params p, int i, double by) {
  p[i] += by;
  return p;
}

// Everything at one parameter point from explicit dense matrices.
struct DenseEval {
  double energy;
  double norm;
  Eigen::VectorXcd berry;
  Eigen::VectorXd gradient;
  Eigen::MatrixXcd metric;
};

DenseEval dense_eval(const Ansatz& ansatz, const Params& params, int m, Reference ref,
                     bool symmetrize = true) {
  const int n = ansatz.n_qubits();
  const auto dim = Eigen::Index{1} << n;
  const oracle::Dense h = oracle::heisenberg(n);
  const oracle::Dense p = symmetrize ? oracle::projector(n, m) : oracle::Dense::Identity(dim, dim);
  const Eigen::VectorXcd ref_vec = oracle::to_vec(reference_state(n, ref));

  const auto& gates = ansatz.gates();
  std::vector<oracle::Dense> u;
  for (const auto& g : gates) u.push_back(oracle::eswap(n, g.first, g.second, params[g.param]));
  oracle::Dense total = oracle::Dense::Identity(dim, dim);
  for (const auto& f : u) total = f * total;
  const Eigen::VectorXcd psi = total * ref_vec;

  const int np = ansatz.n_params();
  std::vector<Eigen::VectorXcd> d(np);
  for (std::size_t t = 0; t < gates.size(); ++t) {
    // d/dtheta of exp(-i theta P/2) is (-i/2) P exp(-i theta P/2); P = i U(pi).
    const oracle::Dense swap = cplx{0.0, 1.0} * oracle::eswap(n, gates[t].first, gates[t].second, kPi);
    oracle::Dense prod = oracle::Dense::Identity(dim, dim);
    for (std::size_t s = 0; s < gates.size(); ++s) {
      prod = u[s] * prod;
      if (s == t) prod = (cplx{0.0, -0.5} * swap) * prod;
    }
    d[gates[t].param] = prod * ref_vec;
  }

  DenseEval out;
  out.norm = psi.dot(p * psi).real();
  out.energy = psi.dot(h * p * psi).real() / out.norm;
  out.berry.resize(np);
  out.gradient.resize(np);
  out.metric.resize(np, np);
  for (int i = 0; i < np; ++i) {
    out.berry[i] = psi.dot(p * d[i]) / out.norm;
    out.gradient[i] = 2.0 * ((p * psi).dot(h * d[i]) / out.norm - out.berry[i] * out.energy).real();
  }
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      out.metric(i, j) = d[i].dot(p * d[j]) / out.norm - std::conj(out.berry[i]) * out.berry[j];
    }
  }
  return out;
}

TEST(TrialState, ZeroAnglesReturnReference) {
  const Ansatz a(6, 2);
  for (const Reference r : {Reference::kSingletProduct, Reference::kTripletTail}) {
    const SectorSpec spec = SectorSpec::unsymmetrized(6, r);
    EXPECT_LE(max_abs_diff(trial_state(a, zero_params(a), spec), reference_state(6, r)), 1e-15);
  }
}

TEST(TrialState, SpinOfReferenceIsKept) {
  const Ansatz a(8, 2);
  for (int seed = 0; seed < 20; ++seed) {
    const Params p = random_params(a, seed);
    const StateVector s =
        trial_state(a, p, SectorSpec::unsymmetrized(8, Reference::kSingletProduct));
    const StateVector t = trial_state(a, p, SectorSpec::unsymmetrized(8, Reference::kTripletTail));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    EXPECT_NEAR(total_spin_sq(s), 0.0, 1e-9);
    EXPECT_NEAR(total_spin_sq(t), 2.0, 1e-9);
  }
}

TEST(TrialState, TwoGatesGiveFourSiteGroundState) {
  const Ansatz a(4, 1);
  Params p = zero_params(a);
  const N4Circuit c = n4_ground_circuit();
  p[a.param_index(0, 1)] = c.theta1;  // sites (2, 3)
  p[a.param_index(0, 2)] = c.theta2;  // sites (3, 4)
  const StateVector s = trial_state(a, p, SectorSpec::unsymmetrized(4));
  EXPECT_NEAR(std::abs(inner(n4_exact_ground(), s)), 1.0, 1e-12);
}

TEST(TrialState, RejectsSizeMismatch) {
  const Ansatz a(4, 1);
  EXPECT_THROW(trial_state(a, Params{{0.0, 0.0}}, SectorSpec::unsymmetrized(4)),
               std::invalid_argument);
  EXPECT_THROW(trial_state(a, zero_params(a), SectorSpec::unsymmetrized(6)),
               std::invalid_argument);
}

TEST(Ansatz, LayoutAndValidation) {
  const Ansatz a(6, 2);
  EXPECT_EQ(a.n_params(), 12);
  ASSERT_EQ(a.gates().size(), 12u);
  // First time step: links 1, 3, 5; second: links 0, 2, 4.
  const std::vector<int> want{1, 3, 5, 0, 2, 4, 7, 9, 11, 6, 8, 10};
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(a.gates()[k].param, want[k]);
  EXPECT_EQ(a.gates()[2].first, 5);
  EXPECT_EQ(a.gates()[2].second, 0);
  EXPECT_THROW(Ansatz(5, 1), std::invalid_argument);
  EXPECT_THROW(Ansatz(2, 1), std::invalid_argument);
  EXPECT_THROW(Ansatz(6, 0), std::invalid_argument);
  const Params r = random_params(a, 3);
  for (const double t : r.theta) {
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, 2 * kPi);
  }
  EXPECT_EQ(random_params(a, 3).theta, r.theta);
}

TEST(ProjectedEnergy, FourSiteOptimumIsExact) {
  const Ansatz a(4, 1);
  Params p = zero_params(a);
  const N4Circuit c = n4_ground_circuit();
  p[1] = c.theta1;
  p[2] = c.theta2;
  const ProjectedEnergy e = projected_energy(a, p, SectorSpec::symmetrized(4, 0), HeisenbergRing(4));
  EXPECT_NEAR(e.energy, -2.0, 1e-10);
  const std::vector<double> grad =
      energy_gradient(a, p, SectorSpec::symmetrized(4, 0), HeisenbergRing(4));
  double sq = 0.0;
  for (const double g : grad) sq += g * g;
  EXPECT_LE(std::sqrt(sq), 1e-8);
}

TEST(ProjectedEnergy, SymmetricInputMatchesPlainExpectation) {
  // A translation-invariant state is its own q = 0 projection.
  const StateVector g = n4_exact_ground();
  const CyclicGroup group(4);
  const StateVector p = project(g, group, MomentumSector(4, 0));
  EXPECT_LE(max_abs_diff(p, g), 1e-12);
}

TEST(ProjectedEnergy, MatchesDenseProjectorAtZeroAngles) {
  const Ansatz a(8, 1);
  const DenseEval d = dense_eval(a, zero_params(a), 0, Reference::kSingletProduct);
  const ProjectedEnergy e =
      projected_energy(a, zero_params(a), SectorSpec::symmetrized(8, 0), HeisenbergRing(8));
  EXPECT_NEAR(e.energy, d.energy, 1e-12);
  EXPECT_NEAR(e.norm, d.norm, 1e-12);
}

TEST(ProjectedEnergy, NormFloor) {
  // The q = 0 component of the triplet-tail reference vanishes at N = 4.
  const Ansatz a(4, 1);
  EXPECT_THROW(projected_energy(a, zero_params(a),
                                SectorSpec::symmetrized(4, 0, Reference::kTripletTail),
                                HeisenbergRing(4)),
               NormFloorError);
}

TEST(ShiftedState, IsTheDerivative) {
  const Ansatz a(6, 2);
  const SectorSpec spec = SectorSpec::unsymmetrized(6);
  const Params p = random_params(a, 4);
  const double eps = 1e-4;
  for (int i = 0; i < a.n_params(); ++i) {
    StateVector fd = trial_state(a, shifted(p, i, eps), spec) -
                     trial_state(a, shifted(p, i, -eps), spec);
    fd *= 1.0 / (2 * eps);
    const StateVector d = shifted_state(a, p, i, spec);
    EXPECT_LE((fd - d).norm(), 1e-6);
    EXPECT_NEAR(d.norm(), 0.5, 1e-12);
  }
  EXPECT_THROW(shifted_state(a, p, a.n_params(), spec), std::invalid_argument);
}

TEST(ShiftedState, AtZeroAnglesIsHalfMinusISwap) {
  const Ansatz a(4, 1);
  const SectorSpec spec = SectorSpec::unsymmetrized(4);
  const StateVector phi = singlet_product(4);
  for (int link = 0; link < 4; ++link) {
    const StateVector want =
        cplx{0.0, -0.5} * apply_gate(phi, Swap{link, (link + 1) % 4});
    EXPECT_LE(max_abs_diff(shifted_state(a, zero_params(a), link, spec), want), 1e-15);
  }
}

TEST(BerryA, RealPartIsLogNormDerivative) {
  const Ansatz a(8, 2);
  const SectorSpec spec = SectorSpec::symmetrized(8, 1);
  const Params p = random_params(a, 6);
  const std::vector<cplx> berry = berry_a(a, p, spec);
  const double eps = 1e-4;
  for (int i = 0; i < a.n_params(); ++i) {
    const double plus = std::log(projected_energy(a, shifted(p, i, eps), spec, HeisenbergRing(8)).norm);
    const double minus = std::log(projected_energy(a, shifted(p, i, -eps), spec, HeisenbergRing(8)).norm);
    const double fd = (plus - minus) / (2 * eps);
    EXPECT_LE(std::abs(2 * berry[i].real() - fd), 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST(BerryA, SymmetricCaseReducesToPlainOverlap) {
  // q = 0 with a translation-invariant trial state: P acts as the identity.
  const Ansatz a(4, 1);
  const N4Circuit c = n4_ground_circuit();
  Params p = zero_params(a);
  p[1] = c.theta1;
  p[2] = c.theta2;
  const SectorSpec spec = SectorSpec::symmetrized(4, 0);
  const std::vector<cplx> berry = berry_a(a, p, spec);
  const StateVector psi = trial_state(a, p, spec);
  for (int i = 0; i < 4; ++i) {
    EXPECT_LE(std::abs(berry[i] - inner(psi, shifted_state(a, p, i, spec))), 1e-12);
  }
}

TEST(DenseOracle, FourSitesAtZeroAngles) {
  const Ansatz a(4, 1);
  const Params p = zero_params(a);
  const SectorSpec spec = SectorSpec::symmetrized(4, 0);
  const DenseEval d = dense_eval(a, p, 0, Reference::kSingletProduct);
  const std::vector<cplx> berry = berry_a(a, p, spec);
  const Eigen::MatrixXcd g = metric_tensor(a, p, spec);
  for (int i = 0; i < 4; ++i) EXPECT_LE(std::abs(berry[i] - d.berry[i]), 1e-12);
  EXPECT_LE((g - d.metric).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Gradient, MatchesFiniteDifferences) {
  const int n = 8;
  const Ansatz a(n, 2);
  const HeisenbergRing model(n);
  const double eps = 1e-4;
  for (int trial = 0; trial < 10; ++trial) {
    const int m = trial % 4;
    const Reference ref = trial % 2 ? Reference::kTripletTail : Reference::kSingletProduct;
    const SectorSpec spec = SectorSpec::symmetrized(n, m, ref);
    const Params p = random_params(a, 100 + trial);
    const std::vector<double> grad = energy_gradient(a, p, spec, model);
    const double e = projected_energy(a, p, spec, model).energy;
    for (int i = 0; i < a.n_params(); ++i) {
      const double fd = (projected_energy(a, shifted(p, i, eps), spec, model).energy -
                         projected_energy(a, shifted(p, i, -eps), spec, model).energy) /
                        (2 * eps);
      EXPECT_LE(std::abs(grad[i] - fd), 1e-6 * std::max(1.0, std::abs(e)))
          << "trial " << trial << " i " << i;
    }
  }
}

TEST(Gradient, UnsymmetrizedMatchesDenseOracle) {
  const Ansatz a(4, 1);
  const N4Circuit c = n4_ground_circuit();
  Params p = zero_params(a);
  p[1] = c.theta1 + 0.1;
  p[2] = c.theta2 - 0.2;
  const DenseEval unprojected = dense_eval(a, p, 0, Reference::kSingletProduct, false);
  const std::vector<double> grad =
      energy_gradient(a, p, SectorSpec::unsymmetrized(4), HeisenbergRing(4));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(grad[i], unprojected.gradient[i], 1e-12);
}

TEST(Metric, HermitianAndPositive) {
  const Ansatz a(8, 2);
  for (int seed = 0; seed < 5; ++seed) {
    const Eigen::MatrixXcd g = metric_tensor(a, random_params(a, 200 + seed),
                                             SectorSpec::symmetrized(8, seed - 2));
    EXPECT_LE((g - g.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.real());
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-9);
  }
}

TEST(Metric, MatchesNormalizedStateDefinition) {
  // G_ij = <d_i s|d_j s> - <d_i s|s><s|d_j s> for s = P Psi / sqrt(N), with
  // derivatives of s taken by central differences.
  const int n = 8;
  const Ansatz a(n, 2);
  const SectorSpec spec = SectorSpec::symmetrized(n, 2);
  const Params p = random_params(a, 17);
  const auto normalized = [&](const Params& q) {
    StateVector s = projected_state(a, q, spec);
    s.normalize();
    return s;
  };
  const StateVector s = normalized(p);
  const double eps = 1e-4;
  std::vector<StateVector> ds;
  for (int i = 0; i < a.n_params(); ++i) {
    StateVector d = normalized(shifted(p, i, eps)) - normalized(shifted(p, i, -eps));
    d *= 1.0 / (2 * eps);
    ds.push_back(std::move(d));
  }
  const Eigen::MatrixXcd g = metric_tensor(a, p, spec);
  for (int i = 0; i < a.n_params(); ++i) {
    for (int j = 0; j < a.n_params(); ++j) {
      const cplx want = inner(ds[i], ds[j]) - inner(ds[i], s) * inner(s, ds[j]);
      EXPECT_LE(std::abs(g(i, j) - want), 1e-5) << i << "," << j;
    }
  }
}

struct FastCase {
  int n;
  int layers;
  int m;
  Reference ref;
  bool symmetrize;
};

class FastRouteTest : public ::testing::TestWithParam<FastCase> {};

TEST_P(FastRouteTest, AgreesWithDenseOracle) {
  const FastCase c = GetParam();
  const Ansatz a(c.n, c.layers);
  const SectorSpec spec = c.symmetrize ? SectorSpec::symmetrized(c.n, c.m, c.ref)
                                       : SectorSpec::unsymmetrized(c.n, c.ref);
  const VariationalProblem problem(a, spec, HeisenbergRing(c.n));
  for (int seed = 0; seed < 3; ++seed) {
    const Params p = random_params(a, 300 + seed);
    const DenseEval d = dense_eval(a, p, c.m, c.ref, c.symmetrize);
    const Evaluation ev = problem.evaluate(p);
    EXPECT_NEAR(ev.energy, d.energy, 1e-11);
    EXPECT_NEAR(ev.norm, d.norm, 1e-12);
    for (int i = 0; i < a.n_params(); ++i) {
      EXPECT_LE(std::abs(ev.berry[i] - d.berry[i]), 1e-12);
      EXPECT_NEAR(ev.gradient[i], d.gradient[i], 1e-11);
    }
    EXPECT_LE((ev.metric - d.metric).cwiseAbs().maxCoeff(), 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Sectors, FastRouteTest,
    ::testing::Values(FastCase{4, 1, 0, Reference::kSingletProduct, true},
                      FastCase{4, 2, 2, Reference::kTripletTail, true},
                      FastCase{6, 2, 1, Reference::kSingletProduct, true},
                      FastCase{6, 1, -2, Reference::kTripletTail, true},
                      FastCase{8, 2, 3, Reference::kTripletTail, true},
                      FastCase{8, 2, 4, Reference::kSingletProduct, true},
                      FastCase{8, 1, 0, Reference::kSingletProduct, false}));

TEST(VariationalProblem, FidelityAndSymmetrizedState) {
  const int n = 8;
  const Ansatz a(n, 2);
  const HeisenbergRing model(n);
  const SpectrumResult exact = lanczos_ground(model, SpectrumSector{0, 0.0});
  VariationalProblem problem(a, SectorSpec::symmetrized(n, 0), model);
  EXPECT_FALSE(problem.has_target());
  problem.set_target(exact.eigenvector);
  const Params p = random_params(a, 8);
  const Evaluation ev = problem.evaluate(p);
  StateVector s = projected_state(a, p, problem.spec());
  s.normalize();
  ASSERT_TRUE(ev.fidelity.has_value());
  EXPECT_NEAR(*ev.fidelity, fidelity(exact.eigenvector, s), 1e-12);
  EXPECT_TRUE(equal_up_to_phase(problem.symmetrized_state(p), s, 1e-12));
  // The projected state carries momentum q and stays a singlet.
  const StateVector sym = problem.symmetrized_state(p);
  EXPECT_LE(max_abs_diff(translate(sym, 1), sym), 1e-9);
  EXPECT_NEAR(total_spin_sq(sym), 0.0, 1e-9);
  // Variational bound within the sector.
  EXPECT_GE(ev.energy, exact.energy - 1e-8);
}

TEST(VariationalProblem, NormFloorAndSizeChecks) {
  const Ansatz a(4, 1);
  const VariationalProblem problem(
      a, SectorSpec::symmetrized(4, 0, Reference::kTripletTail), HeisenbergRing(4));
  EXPECT_THROW(problem.evaluate(zero_params(a)), NormFloorError);
  EXPECT_THROW(VariationalProblem(a, SectorSpec::symmetrized(6, 0), HeisenbergRing(4)),
               std::invalid_argument);
}

}  // namespace
}  // namespace savqe
