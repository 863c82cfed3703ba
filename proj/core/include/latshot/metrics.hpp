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

#ifndef LATSHOT_METRICS_HPP_
#define LATSHOT_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latshot/partition.hpp"
#include "latshot/spectral.hpp"

namespace latshot {

struct Allocation {
  std::vector<std::int64_t> budgets;
  std::int64_t total = 0;
  double achieved_cost = 0;  // sum_b Var_b / M_b
};

// Shots proportional to sqrt(Var_b), rounded by largest remainder. Parts with
// zero variance get one shot each.
Allocation optimal_allocation(const std::vector<double>& variances,
                              std::int64_t M);
// sum_b Var_b / M_b for an arbitrary allocation; parts with zero shots must
// have zero variance.
double allocation_cost(const std::vector<double>& variances,
                       const std::vector<std::int64_t>& budgets);

// (sum_b sqrt(Var_b))^2
double partition_cost(const std::vector<double>& variances);
double partition_cost(const Partitioning& parts, const StateVector& psi);
std::vector<double> part_variances(const Partitioning& parts,
                                   const StateVector& psi);

struct Sandwich {
  double upper = 0;  // |B| sum Var
  double mid = 0;    // (sum sqrt Var)^2
  double lower = 0;  // sum (2k-1) Var_k, Var sorted non-increasing
};
Sandwich variance_sandwich(const std::vector<double>& variances);

enum class Hypotheses { kMet, kDegenerate, kNotApplicable };
std::string hypotheses_name(Hypotheses h);

struct BoundOptions {
  // Appendix-only strengthening 4L(1+CoR)/(1-CoR) for Geo1D with L >= 2.
  bool appendix_strict = false;
};

// Lower bound on g for a geometric partitioning of a 2-local translation
// invariant model on a nondegenerate eigenstate. Returns nullopt when the
// bound diverges (cor >= 1).
std::optional<double> theorem1_bound(const PartitionSpec& spec,
                                     std::optional<double> cor_cut,
                                     const BoundOptions& opts = {});

// Cost ratios above this are rounding noise on a vanishing denominator and
// are reported as diverging.
inline constexpr double kDivergenceRatio = 1e12;

struct ImprovementReport {
  std::string label_numerator;
  std::string label_denominator;
  double g = 0;
  double cost_numerator = 0;
  double cost_denominator = 0;
  bool diverging = false;
  std::optional<double> bound;
  std::optional<double> cor_cut;
  Hypotheses hypotheses = Hypotheses::kNotApplicable;
};

struct EigenstateInfo {
  bool is_eigenstate = false;
  bool degenerate = false;
};

// g = cost(B1) / cost(B2). When B2 is a two-part Geo1D/Geo2D (or TwoLocal)
// partitioning of a nearest-neighbour model and psi is an eigenstate, the
// Theorem 1 bound and CoR(H_cut, H_cut') are attached.
ImprovementReport relative_complexity(const Partitioning& B1,
                                      const Partitioning& B2,
                                      const StateVector& psi,
                                      const LatticeHamiltonian* H = nullptr,
                                      EigenstateInfo eig = {},
                                      const BoundOptions& opts = {});

// Smallest M with Chebyshev failure probability <= failure_prob for error
// eps: ceil(Var / (eps^2 p)), at least one shot.
std::int64_t shots_for_confidence(double variance, double eps,
                                  double failure_prob);

enum class TfimRegime { kDisordered, kOrdered };

struct PerturbativePrediction {
  std::optional<double> g;            // closed-form value when one exists
  std::string scaling;                // "Theta(1/lambda^2)" when no constant
  bool outside_validity = false;      // lambda > 0.1
};

// Small-coupling predictions for g(Pauli, Geo1D(L)) in the 2D TFIM:
// disordered (J/h -> 0) 4L; ordered (h/J -> 0) Theta(1/lambda^2) for L <= 2,
// 32L for L > 2 with unit seam shift and 16L for larger shifts.
PerturbativePrediction tfim_perturbative_G(TfimRegime regime, int L,
                                           int seam_shift, double lambda);

}  // namespace latshot

#endif  // LATSHOT_METRICS_HPP_
