// Copyright 2026 The latshot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "latshot/lattice.hpp"
#include "latshot/models.hpp"
#include "latshot/oracle/dense.hpp"
#include "latshot/partition.hpp"
#include "latshot/spectral.hpp"
#include "test_util.hpp"

namespace latshot {
namespace {

using oracle::dense_matrix;
using oracle::to_eigen;

TEST(Apply, IdentityAndBitFlip) {
  PauliSum id(3);
  id.add("III", 1.0);
  std::mt19937_64 rng(1);
  const auto psi = testing::random_state(3, rng);
  EXPECT_EQ(apply(id, psi).amp, psi.amp);

  PauliSum x0(3);
  x0.add("XII", 1.0);
  const auto out = apply(x0, StateVector::basis(3, 0));
  EXPECT_EQ(out.amp[1], cplx(1, 0));
}

TEST(Apply, MatchesDenseOracle) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 5; ++rep) {
    const auto H = testing::random_sum(4, 12, rng);
    const auto psi = testing::random_state(4, rng);
    const Eigen::VectorXcd want = dense_matrix(H) * to_eigen(psi);
    EXPECT_LT((to_eigen(apply(H, psi)) - want).norm(), 1e-12);
  }
  const auto H = testing::random_sum(3, 4, rng);
  EXPECT_THROW(apply(H, StateVector(4)), DimensionError);
}

TEST(StateIo, RoundTrip) {
  std::mt19937_64 rng(3);
  auto psi = testing::random_state(5, rng);
  std::stringstream ss;
  write_state(ss, psi);
  const auto back = read_state(ss);
  EXPECT_EQ(back.n_qubits, 5);
  EXPECT_EQ(back.amp, psi.amp);
  std::stringstream junk("not a state");
  EXPECT_THROW(read_state(junk), std::runtime_error);
}

TEST(GroundState, DenseAndLanczosAgree) {
  const auto H = build_tfim(build_lattice(3, 3), 1, 1).pauli();
  SolverOptions dense_opts, lanczos_opts;
  dense_opts.force_dense = true;
  lanczos_opts.force_lanczos = true;
  const auto a = ground_state(H, 1, dense_opts);
  const auto b = ground_state(H, 1, lanczos_opts);
  EXPECT_EQ(a.method, "dense");
  EXPECT_EQ(b.method, "lanczos");
  EXPECT_NEAR(a.energies[0], b.energies[0], 1e-8);
  EXPECT_NEAR(a.gap, b.gap, 1e-7);
  EXPECT_NEAR(std::abs(inner(a.states[0].amp, b.states[0].amp)), 1.0, 1e-8);
  for (const auto* s : {&a, &b}) {
    EXPECT_NEAR(s->states[0].norm(), 1.0, 1e-10);
    EXPECT_LE(s->max_residual, 1e-8 * l1_norm(H));
  }
}

TEST(GroundState, ClassicalIsingIsDegenerate) {
  const auto lat = build_lattice(3, 3);
  const auto H = build_tfim(lat, 1.0, 0.0).pauli();
  const auto sol = ground_state(H);
  EXPECT_NEAR(sol.energies[0], -18.0, 1e-10);
  EXPECT_TRUE(sol.degenerate);
  EXPECT_FALSE(ground_state(build_tfim(lat, 1.0, 1.0).pauli()).degenerate);
}

TEST(GroundState, Guards) {
  const auto H = build_tfim(build_lattice(3, 3), 1, 1).pauli();
  SolverOptions o;
  o.max_qubits = 8;
  EXPECT_THROW(ground_state(H, 1, o), DimensionError);
  SolverOptions tiny;
  tiny.force_lanczos = true;
  tiny.max_memory_bytes = 1024;
  EXPECT_THROW(ground_state(H, 1, tiny), SolverError);
}

TEST(Moments, VarianceBasics) {
  PauliSum x(1);
  x.add("X", 1.0);
  EXPECT_DOUBLE_EQ(variance(x, StateVector::basis(1, 0)), 1.0);
  const auto H = build_tfim(build_lattice(3, 3), 1, 1).pauli();
  const auto sol = ground_state(H);
  EXPECT_NEAR(variance(H, sol.states[0]), 0.0, 1e-8);
}

TEST(Moments, PartVarianceMatchesDenseOracle) {
  const auto H = build_tfim(build_lattice(3, 3), 1, 1);
  const auto psi = ground_state(H.pauli()).states[0];
  const auto p = geometric_partition(H, PartitionSpec::geo1d(1));
  for (const auto& part : p.parts) {
    EXPECT_NEAR(variance(part, psi),
                oracle::dense_variance(dense_matrix(part), to_eigen(psi)), 1e-9);
  }
}

TEST(Moments, CovarianceIdentities) {
  std::mt19937_64 rng(4);
  const auto A = testing::random_sum(6, 10, rng);
  const auto B = testing::random_sum(6, 10, rng);
  const auto psi = testing::random_state(6, rng);
  EXPECT_NEAR(covariance_sym(A, A, psi), variance(A, psi), 1e-10);
  EXPECT_NEAR(variance(A + B, psi),
              variance(A, psi) + variance(B, psi) + 2 * covariance_sym(A, B, psi),
              1e-9);
  EXPECT_NEAR(correlation(A, A, psi), 1.0, 1e-12);
}

TEST(Moments, UndefinedCorrelation) {
  PauliSum z(1), x(1);
  z.add("Z", 1.0);
  x.add("X", 1.0);
  EXPECT_THROW(correlation(z, x, StateVector::basis(1, 0)), UndefinedCorrelation);
}

TEST(Moments, CommutatorVanishesOnEigenstate) {
  const auto H = build_tfim(build_lattice(3, 3), 1, 0.8);
  const auto psi = ground_state(H.pauli()).states[0];
  const auto p = geometric_partition(H, PartitionSpec::geo1d(1));
  EXPECT_LT(std::abs(commutator_expectation(p.parts[0], p.parts[1], psi)), 1e-8);
  std::mt19937_64 rng(5);
  const auto r = testing::random_state(9, rng);
  const cplx c = commutator_expectation(p.parts[0], p.parts[1], r);
  EXPECT_LT(std::abs(c.real()), 1e-10);
}

TEST(Moments, CutCorrelationMatchesDenseOracle) {
  const auto H = build_tfim(build_lattice(3, 3), 1, 1);
  const auto psi = ground_state(H.pauli()).states[0];
  const auto cut = make_cut_pair(H, PartitionSpec::geo1d(1));
  const auto v = to_eigen(psi);
  const Eigen::MatrixXcd a = dense_matrix(cut.h_cut), b = dense_matrix(cut.h_cut_prime);
  const double ea = oracle::dense_expectation(a, v), eb = oracle::dense_expectation(b, v);
  const double cov = (v.adjoint() * (a * b + b * a) * v)(0).real() / 2 - ea * eb;
  const double want =
      cov / std::sqrt(oracle::dense_variance(a, v) * oracle::dense_variance(b, v));
  EXPECT_NEAR(correlation(cut.h_cut, cut.h_cut_prime, psi), want, 1e-9);
}

TEST(Moments, TwoPartEigenstateVariancesEqual) {
  const auto H = build_tfim(build_lattice(4, 3), 0.6, 1);
  const auto psi = ground_state(H.pauli()).states[0];
  const auto p = geometric_partition(H, PartitionSpec::geo1d(2));
  const auto stats = moment_stats(p, psi);
  ASSERT_EQ(stats.size(), 2u);
  EXPECT_NEAR(stats[0].variance, stats[1].variance, 1e-8);
  EXPECT_NEAR(stats[0].mean + stats[1].mean, expectation(H.pauli(), psi), 1e-9);
  EXPECT_DOUBLE_EQ(stats[0].frob_sq_over_d, frobenius_norm_sq_over_d(p.parts[0]));
  EXPECT_NEAR(stats[0].variance, stats[0].second_moment - stats[0].mean * stats[0].mean,
              1e-9);
}

}  // namespace
}  // namespace latshot
