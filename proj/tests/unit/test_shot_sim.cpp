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

#include <cmath>
#include <random>

#include "latshot/lattice.hpp"
#include "latshot/metrics.hpp"
#include "latshot/models.hpp"
#include "latshot/partition.hpp"
#include "latshot/shot_sim.hpp"
#include "latshot/spectral.hpp"
#include "test_util.hpp"

namespace latshot {
namespace {

StateVector plus_state(int n) {
  StateVector psi(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(psi.dim()));
  for (auto& x : psi.amp) x = a;
  return psi;
}

TEST(Sampler, SingleZOnPlusState) {
  PauliSum z(1);
  z.add("Z", 1.0);
  const auto s = build_sampler(z);
  EXPECT_TRUE(s.product_basis);
  const auto d = outcome_distribution(s, plus_state(1));
  EXPECT_NEAR(d.mean(), 0.0, 1e-15);
  EXPECT_NEAR(d.variance(), 1.0, 1e-15);
  std::mt19937_64 rng(1);
  int plus = 0;
  const int N = 20000;
  for (int k = 0; k < N; ++k) {
    const double v = sample_outcome(d, rng);
    ASSERT_TRUE(v == 1.0 || v == -1.0);
    plus += v > 0;
  }
  EXPECT_NEAR(static_cast<double>(plus) / N, 0.5, 4 * 0.5 / std::sqrt(N));
}

TEST(Sampler, DistributionMomentsMatchOperator) {
  std::mt19937_64 rng(2);
  const auto H = build_tfim(build_lattice(3, 2), 0.9, 1.2);
  const auto psi = testing::random_state(6, rng);
  for (const auto& part :
       {pauli_baseline(H).parts[0], geometric_partition(H, PartitionSpec::geo1d(1)).parts[1],
        H.pauli()}) {
    const auto d = outcome_distribution(build_sampler(part), psi);
    EXPECT_NEAR(d.mean(), expectation(part, psi), 1e-10);
    EXPECT_NEAR(d.variance(), variance(part, psi), 1e-10);
    EXPECT_NEAR(d.cdf.back(), 1.0, 1e-12);
  }
}

TEST(Sampler, EigenstateGivesConstantOutcome) {
  const auto H = build_tfim(build_lattice(3, 2), 1, 1).pauli();
  const auto sol = ground_state(H);
  const auto d = outcome_distribution(build_sampler(H), sol.states[0]);
  EXPECT_NEAR(d.variance(), 0.0, 1e-9);
  EXPECT_NEAR(d.mean(), sol.energies[0], 1e-9);
}

TEST(Sampler, BlockLimit) {
  const auto H = build_tfim(build_lattice(3, 2), 1, 1).pauli();
  SamplerOptions o;
  o.max_block_qubits = 4;
  EXPECT_THROW(build_sampler(H, o), SamplerError);
}

TEST(Estimator, UnbiasedAndDeterministic) {
  const auto H = build_tfim(build_lattice(3, 2), 1, 0.8);
  std::mt19937_64 rng(3);
  const auto psi = testing::random_state(6, rng);
  const auto geo = geometric_partition(H, PartitionSpec::geo1d(1));
  const auto a = simulate_estimator(geo, psi, 200, 42, 400);
  const auto b = simulate_estimator(geo, psi, 200, 42, 400);
  EXPECT_EQ(a.estimates, b.estimates);
  EXPECT_NE(a.estimates, simulate_estimator(geo, psi, 200, 43, 400).estimates);
  EXPECT_NEAR(a.estimate, expectation(H.pauli(), psi),
              4 * a.empirical_stderr / std::sqrt(a.trials));
}

TEST(Estimator, VarianceMatchesPrediction) {
  const auto H = build_tfim(build_lattice(3, 3), 1, 1);
  const auto psi = ground_state(H.pauli()).states[0];
  const auto pauli = pauli_baseline(H);
  const std::int64_t M = 500;
  const auto alloc = optimal_allocation(part_variances(pauli, psi), M);
  const auto run = simulate_estimator(pauli, psi, alloc, 7, 400);
  const auto chk = compare_predictions(run, alloc.achieved_cost * M, M);
  EXPECT_LT(std::abs(chk.z), 4.0);
  // Negative control: halving the prediction is detected.
  EXPECT_GT(std::abs(compare_predictions(run, alloc.achieved_cost * M / 2, M).z), 4.0);
}

TEST(Estimator, OptimalBeatsUniform) {
  const auto H = build_tfim(build_lattice(3, 2), 1, 0.3);
  const auto psi = ground_state(H.pauli()).states[0];
  const auto geo = geometric_partition(H, PartitionSpec::geo1d(1));
  const auto vars = part_variances(geo, psi);
  const std::int64_t M = 400;
  const auto opt = optimal_allocation(vars, M);
  const auto uni = uniform_allocation(geo.size(), M);
  EXPECT_LE(opt.achieved_cost, allocation_cost(vars, uni.budgets) + 1e-15);
}

TEST(Estimator, ZeroVarianceAndGuards) {
  const auto H = build_tfim(build_lattice(3, 2), 1, 1);
  const auto sol = ground_state(H.pauli());
  const auto whole = whole_partition(H.pauli());
  const auto run = simulate_estimator(whole, sol.states[0], 50, 1, 30);
  EXPECT_NEAR(run.empirical_variance, 0.0, 1e-12);
  EXPECT_EQ(compare_predictions(run, 0.0, 50).z, 0.0);
  const auto few = simulate_estimator(whole, sol.states[0], 50, 1, 10);
  EXPECT_THROW(compare_predictions(few, 0.0, 50), std::invalid_argument);
  EXPECT_EQ(uniform_allocation(3, 10).budgets, (std::vector<std::int64_t>{4, 3, 3}));
}

TEST(Estimator, FermionicParts) {
  const auto H = build_spinless_hubbard(build_lattice(2, 3), 1, 1, 0);
  const auto psi = ground_state(H.pauli()).states[0];
  const auto p = pauli_baseline(H);
  for (const auto& part : p.parts) {
    const auto d = outcome_distribution(build_sampler(part), psi);
    EXPECT_NEAR(d.variance(), variance(part, psi), 1e-9);
  }
}

}  // namespace
}  // namespace latshot
