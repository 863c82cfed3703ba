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

#ifndef LATSHOT_SHOT_SIM_HPP_
#define LATSHOT_SHOT_SIM_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "latshot/metrics.hpp"
#include "latshot/partition.hpp"
#include "latshot/spectral.hpp"

namespace latshot {

class SamplerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Basis change on a set of qubits: columns of `basis` are eigenvectors of
// the block operator, local index bit k is qubits[k].
struct BlockRotation {
  std::vector<int> qubits;
  std::vector<cplx> basis;  // column-major, 2^k x 2^k
};

// Measurement of one part in its eigenbasis. After rotating psi by every
// block, computational index i reads out the eigenvalue values[i].
struct PartSampler {
  PauliSum part;
  std::vector<BlockRotation> rotations;
  std::vector<double> values;
  bool product_basis = false;  // qubit-wise commuting fast path
};

struct SamplerOptions {
  int max_block_qubits = 12;
};

// Qubit-wise commuting parts are measured in a product basis. Otherwise the
// part is split into connected components of its term supports and each
// component is diagonalized densely.
PartSampler build_sampler(const PauliSum& part, const SamplerOptions& opts = {});

struct OutcomeDistribution {
  std::vector<double> prob;
  std::vector<double> cdf;
  std::vector<double> values;

  double mean() const;
  double variance() const;
};

OutcomeDistribution outcome_distribution(const PartSampler& s,
                                         const StateVector& psi);

// One shot by inversion of the cumulative distribution.
template <class Rng>
double sample_outcome(const OutcomeDistribution& d, Rng& rng);

struct EstimatorRun {
  std::string label;
  std::vector<std::int64_t> budgets;
  std::int64_t M = 0;
  int trials = 0;
  std::vector<double> estimates;        // one per trial
  std::vector<double> part_means;       // averaged over trials
  double estimate = 0;                  // mean over trials
  double empirical_variance = 0;        // across trials, unbiased
  double empirical_stderr = 0;          // sqrt(empirical_variance)
};

Allocation uniform_allocation(std::size_t parts, std::int64_t M);

// Trial t draws budgets[b] shots from part b with a stream seeded from
// (seed, t, b); the estimate is the sum of the per-part sample means.
EstimatorRun simulate_estimator(const Partitioning& B, const StateVector& psi,
                                const Allocation& allocation,
                                std::uint64_t seed, int trials,
                                const SamplerOptions& opts = {});
// Optimal allocation from the exact part variances.
EstimatorRun simulate_estimator(const Partitioning& B, const StateVector& psi,
                                std::int64_t M, std::uint64_t seed, int trials,
                                const SamplerOptions& opts = {});

struct PredictionCheck {
  double empirical_variance = 0;
  double predicted_variance = 0;  // predicted_cost / M
  double se = 0;                  // chi-square based
  double z = 0;
};

// z = (empirical - predicted) / (predicted sqrt(2/(T-1))). Requires at
// least 30 trials. With zero predicted variance, z is 0 if the empirical
// variance is below 1e-12 max(1, estimate^2) and +inf otherwise.
PredictionCheck compare_predictions(const EstimatorRun& run,
                                    double predicted_cost, std::int64_t M);

}  // namespace latshot

#include "latshot/shot_sim_inl.hpp"

#endif  // LATSHOT_SHOT_SIM_HPP_
