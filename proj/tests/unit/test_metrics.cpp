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
#include "latshot/oracle/dense.hpp"
#include "latshot/partition.hpp"
#include "latshot/spectral.hpp"

namespace latshot {
namespace {

TEST(Allocation, ProportionalToStandardDeviation) {
  const auto a = optimal_allocation({4, 1}, 30);
  EXPECT_EQ(a.budgets, (std::vector<std::int64_t>{20, 10}));
  const auto b = optimal_allocation({9, 4, 1}, 60);
  EXPECT_EQ(b.budgets, (std::vector<std::int64_t>{30, 20, 10}));
  EXPECT_NEAR(b.achieved_cost, oracle::brute_force_allocation_cost({9, 4, 1}, 60),
              1e-12);
}

TEST(Allocation, NearBruteForceOnRandomInputs) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<double> v(3);
    for (auto& x : v) x = u(rng);
    const int M = 12 + static_cast<int>(rng() % 40);
    const auto a = optimal_allocation(v, M);
    std::int64_t total = 0;
    for (auto m : a.budgets) {
      EXPECT_GE(m, 1);
      total += m;
    }
    EXPECT_EQ(total, M);
    const double best = oracle::brute_force_allocation_cost(v, M);
    EXPECT_LE(a.achieved_cost, best * 1.05);
    EXPECT_GE(a.achieved_cost, partition_cost(v) / M - 1e-12);
  }
}

TEST(Allocation, ZeroVarianceAndErrors) {
  const auto a = optimal_allocation({0, 4, 1}, 10);
  EXPECT_EQ(a.budgets[0], 1);
  EXPECT_EQ(a.budgets[0] + a.budgets[1] + a.budgets[2], 10);
  EXPECT_THROW(optimal_allocation({1, 1, 1}, 2), std::invalid_argument);
  EXPECT_THROW(optimal_allocation({-1, 1}, 10), std::invalid_argument);
  EXPECT_THROW(allocation_cost({1, 1}, {1}), std::invalid_argument);
  EXPECT_TRUE(std::isinf(allocation_cost({1, 1}, {5, 0})));
}

TEST(Allocation, ContinuousLimit) {
  const std::vector<double> v = {2.5, 0.3, 1.1, 0.05};
  const std::int64_t M = 1000000;
  const auto a = optimal_allocation(v, M);
  EXPECT_NEAR(a.achieved_cost * M, partition_cost(v), 1e-4 * partition_cost(v));
}

TEST(Sandwich, Ordering) {
  std::mt19937_64 rng(22);
  std::exponential_distribution<double> e(1.0);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> v(1 + rng() % 6);
    for (auto& x : v) x = e(rng);
    const auto s = variance_sandwich(v);
    EXPECT_LE(s.lower, s.mid * (1 + 1e-12));
    EXPECT_LE(s.mid, s.upper * (1 + 1e-12));
  }
  const auto eq = variance_sandwich({2, 2, 2});
  EXPECT_DOUBLE_EQ(eq.mid, eq.upper);
  const auto one = variance_sandwich({3, 0, 0});
  EXPECT_DOUBLE_EQ(one.lower, 3);
  EXPECT_DOUBLE_EQ(one.mid, 3);
  EXPECT_DOUBLE_EQ(one.upper, 9);
}

TEST(Bound, ClosedForms) {
  EXPECT_DOUBLE_EQ(*theorem1_bound(PartitionSpec::two_local(), std::nullopt), 4.0 / 3);
  EXPECT_DOUBLE_EQ(*theorem1_bound(PartitionSpec::geo1d(2), 0.5), 16.0);
  EXPECT_DOUBLE_EQ(*theorem1_bound(PartitionSpec::geo1d(1), 0.0), 4.0);
  EXPECT_DOUBLE_EQ(*theorem1_bound(PartitionSpec::geo2d(2, 2), 0.0), 4.0);
  EXPECT_FALSE(theorem1_bound(PartitionSpec::geo1d(1), 1.0).has_value());
  BoundOptions strict;
  strict.appendix_strict = true;
  EXPECT_DOUBLE_EQ(*theorem1_bound(PartitionSpec::geo1d(2), 0.5, strict), 24.0);
  EXPECT_DOUBLE_EQ(*theorem1_bound(PartitionSpec::geo1d(1), 0.5, strict), 8.0);
  EXPECT_THROW(theorem1_bound(PartitionSpec::geo1d(1), 1.5), std::invalid_argument);
  EXPECT_THROW(theorem1_bound(PartitionSpec::pauli(), 0.0), std::invalid_argument);
}

TEST(RelativeComplexity, TfimGroundState3x3) {
  const auto H = build_tfim(build_lattice(3, 3), 1, 1);
  const auto sol = ground_state(H.pauli());
  const auto pauli = pauli_baseline(H);
  const auto geo = geometric_partition(H, PartitionSpec::geo1d(1));
  const auto r = relative_complexity(pauli, geo, sol.states[0], &H,
                                     {true, sol.degenerate});
  EXPECT_NEAR(r.g, r.cost_numerator / r.cost_denominator, 1e-12 * r.g);
  EXPECT_NEAR(r.g, 253.128391211904, 1e-6 * r.g);
  ASSERT_TRUE(r.bound.has_value());
  ASSERT_TRUE(r.cor_cut.has_value());
  EXPECT_NEAR(*r.cor_cut, 0.968887138591, 1e-8);
  EXPECT_GE(r.g, *r.bound);
  EXPECT_EQ(r.hypotheses, Hypotheses::kMet);
}

TEST(RelativeComplexity, DisorderedLimitApproachesFourL) {
  const auto H = build_tfim(build_lattice(3, 3), 0.01, 1);
  const auto psi = ground_state(H.pauli()).states[0];
  const auto r = relative_complexity(pauli_baseline(H),
                                     geometric_partition(H, PartitionSpec::geo1d(1)), psi);
  const auto pred = tfim_perturbative_G(TfimRegime::kDisordered, 1, 1, 0.01);
  ASSERT_TRUE(pred.g.has_value());
  EXPECT_NEAR(r.g, *pred.g, 0.01 * *pred.g);
  EXPECT_EQ(r.hypotheses, Hypotheses::kNotApplicable);
}

TEST(RelativeComplexity, DivergingDenominator) {
  const auto H = build_tfim(build_lattice(2, 3), 1, 1);
  const auto psi = ground_state(H.pauli()).states[0];
  const auto whole = whole_partition(H.pauli());
  const auto r = relative_complexity(pauli_baseline(H), whole, psi);
  EXPECT_TRUE(r.diverging);
  EXPECT_TRUE(std::isinf(r.g));
  const auto same = relative_complexity(whole, whole, psi);
  EXPECT_FALSE(same.diverging);
  EXPECT_EQ(same.g, 1.0);
}

TEST(Confidence, ChebyshevShots) {
  EXPECT_EQ(shots_for_confidence(1.0, 0.1, 0.05), 2000);
  EXPECT_EQ(shots_for_confidence(0.0, 0.1, 0.05), 1);
  EXPECT_THROW(shots_for_confidence(1.0, 0.0, 0.05), std::invalid_argument);
  EXPECT_THROW(shots_for_confidence(1.0, 0.1, 1.0), std::invalid_argument);
}

TEST(Perturbative, Predictions) {
  EXPECT_EQ(*tfim_perturbative_G(TfimRegime::kDisordered, 3, 1, 0.01).g, 12.0);
  EXPECT_EQ(*tfim_perturbative_G(TfimRegime::kOrdered, 3, 1, 0.01).g, 96.0);
  EXPECT_EQ(*tfim_perturbative_G(TfimRegime::kOrdered, 4, 2, 0.01).g, 64.0);
  const auto p = tfim_perturbative_G(TfimRegime::kOrdered, 2, 1, 0.5);
  EXPECT_FALSE(p.g.has_value());
  EXPECT_EQ(p.scaling, "Theta(1/lambda^2)");
  EXPECT_TRUE(p.outside_validity);
}

}  // namespace
}  // namespace latshot
