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

#ifndef LATSHOT_PERTURBED_HPP_
#define LATSHOT_PERTURBED_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latshot/partition.hpp"
#include "latshot/spectral.hpp"

namespace latshot {

struct NoiseConfig {
  double eps = 0;
  std::uint64_t seed = 1;
  int samples = 10000;
  bool truncate = false;  // drop the O(1/d) terms of the full form

  void validate() const;
};

// Normalized vector of i.i.d. standard complex Gaussians, i.e. exactly Haar.
StateVector haar_sample(int n_qubits, std::mt19937_64& rng);
StateVector haar_sample(int n_qubits, std::uint64_t seed);

// sqrt(1-eps) psi + sqrt(eps) xi, left unnormalized.
StateVector perturbed_state(const StateVector& psi, const StateVector& xi,
                            double eps);

// Haar average of Var(O) on the perturbed state. The stats are those of O on
// the unperturbed state; O is shifted to its traceless part internally.
double expected_variance(const MomentStats& s, double eps, double d,
                         bool truncate = false);

// [sum_b sqrt E Var(B1_b) / sum_b sqrt E Var(B2_b)]^2; +inf when the
// denominator vanishes.
double ensemble_complexity(const std::vector<MomentStats>& b1,
                           const std::vector<MomentStats>& b2, double eps,
                           double d, bool truncate = false);

struct AsymmetryStats {
  double alpha = 0;
  double beta = 0;      // from part 1
  double beta_max = 0;  // max over parts
};

class UndefinedAsymmetry : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// alpha = |<H_1>/E - 1/2|, beta = |F(H_1)/F(H) - 1/2| with F the squared
// traceless Frobenius norm over d.
AsymmetryStats asymmetries(const std::vector<MomentStats>& parts, double energy,
                           double frob_h);

// 4(1-eps)Var(H_1) + eps(1+beta)F(H) + eps(1-eps)(1+alpha^2)E^2
double g_part(const std::vector<MomentStats>& parts, double energy,
              double frob_h, double eps);

struct Corollary3Bounds {
  double lower = 0;
  double upper = 0;
};
Corollary3Bounds corollary3_bounds(const std::vector<MomentStats>& pauli,
                                   const std::vector<MomentStats>& geo,
                                   double energy, double frob_h, double eps);

// (sum_b ||H_b||_F / sum_b' ||H_b'||_F)^2 from traceless coefficients.
double frobenius_criterion(const std::vector<PauliSum>& b1,
                           const std::vector<PauliSum>& b2);
double frobenius_criterion(const Partitioning& b1, const Partitioning& b2);

enum class Regime { kI, kII, kIII };
std::string regime_name(Regime r);

struct RegimeReport {
  Regime regime = Regime::kII;
  double boundary_low = 0;   // 4 Var(H_1) / E^2
  double boundary_high = 0;  // 1 - F(H) / E^2
  bool overlapping = false;  // boundary_low >= boundary_high
};
RegimeReport regime_classify(double eps, double var_part1, double energy,
                             double frob_h);

struct ThresholdReport {
  double delta = 0;
  double alpha = 0;
  std::optional<double> eps_threshold_closed;
  std::optional<double> eps_threshold_numeric;
  // Gbar - (delta + 1) at the bracket ends when no root was found.
  double f_low = 0;
  double f_high = 0;
};

// Theorem 2 threshold for a partitioning against measuring H in its
// eigenbasis. `whole` is the single-part stats of H.
ThresholdReport epsilon_threshold(const std::vector<MomentStats>& parts,
                                  const MomentStats& whole, double energy,
                                  double d, double delta);

// g * delta / (delta - alpha_P^2)
double predicted_threshold_ratio(double g, double alpha_pauli, double delta);

struct MonteCarloEstimate {
  double mean = 0;
  double stderr_ = 0;
};

// Sample mean and standard error of Var(O_k) on perturbed states over Haar
// draws, O_k shifted to its traceless part. Trial t uses its own stream
// seeded from (seed, t).
std::vector<MonteCarloEstimate> mc_perturbed_variance(
    const std::vector<PauliSum>& ops, const StateVector& psi, double eps,
    int samples, std::uint64_t seed);

}  // namespace latshot

#endif  // LATSHOT_PERTURBED_HPP_
