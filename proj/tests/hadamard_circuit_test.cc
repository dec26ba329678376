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
#include "savqe/hamiltonian.h"

namespace savqe {
namespace {

constexpr double kPi = std::numbers::pi;

double correlator(const StateVector& s, int i, int j, char p) {
  const oracle::Dense op = oracle::embed(4, i, oracle::pauli(p)) * oracle::embed(4, j, oracle::pauli(p));
  const Eigen::VectorXcd v = oracle::to_vec(s);
  return v.dot(op * v).real();
}

TEST(FourSiteCircuit, Angles) {
  const N4Circuit c = n4_ground_circuit();
  EXPECT_NEAR(c.theta1 / kPi, 1.6081734479693928, 1e-12);
  EXPECT_NEAR(c.theta2 / kPi, 1.3918265520306072, 1e-12);
  EXPECT_NEAR(c.theta1 + c.theta2, 3 * kPi, 1e-12);
}

TEST(FourSiteCircuit, PreparesGroundStateWithKnownPhase) {
  const N4Circuit c = n4_ground_circuit();
  const cplx overlap = inner(n4_exact_ground(), c.state);
  EXPECT_NEAR(overlap.real(), std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(overlap.imag(), -std::sqrt(1.0 / 3.0), 1e-12);
  EXPECT_NEAR(energy(HeisenbergRing(4), c.state), -2.0, 1e-12);
  EXPECT_NEAR(energy(HeisenbergRing(4, 0.7), c.state), -1.4, 1e-12);
}

TEST(FourSiteCircuit, ReducedStateFromDenseGates) {
  const N4Circuit c = n4_ground_circuit();
  const Eigen::VectorXcd want =
      oracle::eswap(4, 1, 2, c.theta1) * oracle::to_vec(singlet_product(4));
  EXPECT_LE(max_abs_diff(n4_reduced_state(), oracle::from_vec(want)), 1e-12);
}

TEST(FourSiteCircuit, CorrelatorsAreIsotropic) {
  const StateVector g = n4_exact_ground();
  for (int b = 0; b < 4; ++b) {
    for (const char p : {'X', 'Y', 'Z'}) {
      EXPECT_NEAR(correlator(g, b, (b + 1) % 4, p), -2.0 / 3.0, 1e-12) << p << b;
    }
  }
  // X1 X2 is unchanged by the final U34 gate.
  EXPECT_NEAR(correlator(n4_reduced_state(), 0, 1, 'X'), -2.0 / 3.0, 1e-12);
}

TEST(HadamardTest, AncillaMarginals) {
  const AncillaProbs p = exact_probs();
  EXPECT_NEAR(p.p0, 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(p.p1, 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(p.p0 - p.p1, -2.0 / 3.0, 1e-12);
  EXPECT_NEAR(energy_from_estimate(p.p0 - p.p1), -2.0, 1e-12);
  EXPECT_NEAR(energy_from_estimate(p.p0 - p.p1, 2.0), -4.0, 1e-12);
}

TEST(HadamardTest, AncillaReadsRealPartOfCorrelator) {
  // p0 - p1 = Re <Psi|X1 X2|Psi> for the system register.
  const Circuit c = hadamard_test_circuit();
  EXPECT_EQ(c.n_qubits, 5);
  const StateVector out = apply_circuit(basis_state(5, std::uint64_t{0}), c);
  double z = 0.0;
  for (std::size_t x = 0; x < out.dim(); ++x) z += (x & 1 ? -1.0 : 1.0) * std::norm(out[x]);
  EXPECT_NEAR(z, correlator(n4_reduced_state(), 0, 1, 'X'), 1e-12);
}

TEST(Sampling, RecordsAreConsistentAndReproducible) {
  const SampleResult a = sample(16, 1024, 7);
  const SampleResult b = sample(16, 1024, 7);
  ASSERT_EQ(a.shots.count0.size(), 16u);
  for (int s = 0; s < 16; ++s) {
    EXPECT_EQ(a.shots.count0[s] + a.shots.count1[s], 1024);
    EXPECT_EQ(a.shots.count0[s], b.shots.count0[s]);
    EXPECT_DOUBLE_EQ(a.summary.estimates[s],
                     (a.shots.count0[s] - a.shots.count1[s]) / 1024.0);
  }
  EXPECT_EQ(a.summary.mean, b.summary.mean);
  EXPECT_NE(sample(16, 1024, 8).shots.count0, a.shots.count0);
  // The first k records do not depend on how many samples follow.
  const SampleResult c = sample(4, 1024, 7);
  for (int s = 0; s < 4; ++s) EXPECT_EQ(c.shots.count0[s], a.shots.count0[s]);
}

TEST(Sampling, SummaryStatistics) {
  const SampleResult r = sample(16, 1024, 3);
  double mean = 0.0;
  for (const double e : r.summary.estimates) mean += e;
  mean /= 16;
  double var = 0.0;
  for (const double e : r.summary.estimates) var += (e - mean) * (e - mean);
  EXPECT_NEAR(r.summary.mean, mean, 1e-15);
  EXPECT_NEAR(r.summary.sem, std::sqrt(var / 15) / 4, 1e-15);
  EXPECT_LE(std::abs(r.summary.mean + 2.0 / 3.0), 5 * r.summary.sem);
  EXPECT_EQ(sample(1, 10, 3).summary.sem, 0.0);
}

TEST(Sampling, DegenerateProbabilitiesAndValidation) {
  const SampleResult all0 = sample(3, 50, 1, 1.0);
  for (const int c : all0.shots.count0) EXPECT_EQ(c, 50);
  EXPECT_EQ(all0.summary.mean, 1.0);
  const SampleResult all1 = sample(3, 50, 1, 0.0);
  for (const int c : all1.shots.count1) EXPECT_EQ(c, 50);
  EXPECT_THROW(sample(0, 10, 1), std::invalid_argument);
  EXPECT_THROW(sample(2, 10, 1, 1.5), std::invalid_argument);
}

TEST(Formatting, ValueWithError) {
  EXPECT_EQ(format_with_error(-0.668937, 0.00549, 5), "-0.66894(549)");
  EXPECT_EQ(format_with_error(16.504, 0.289, 3), "16.504(289)");
  const std::string table = format_table(sample(16, 1024, 1));
  EXPECT_NE(table.find("Mean"), std::string::npos);
  EXPECT_NE(table.find("Ideal"), std::string::npos);
  EXPECT_NE(table.find("-0.66667"), std::string::npos);
}

}  // namespace
}  // namespace savqe
