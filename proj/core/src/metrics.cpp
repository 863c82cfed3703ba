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

#include "latshot/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace latshot {

Allocation optimal_allocation(const std::vector<double>& variances,
                              std::int64_t M) {
  const std::size_t K = variances.size();
  std::size_t n_pos = 0;
  for (double v : variances) {
    if (v < 0) throw std::invalid_argument("negative variance in allocation");
    if (v > 0) ++n_pos;
  }
  if (K == 0) throw std::invalid_argument("no parts to allocate");
  if (M < static_cast<std::int64_t>(std::max<std::size_t>(n_pos, 1))) {
    throw std::invalid_argument("shot budget " + std::to_string(M) +
                                " smaller than the number of parts with "
                                "nonzero variance");
  }
  Allocation a;
  a.total = M;
  a.budgets.assign(K, 0);
  const bool zeros_get_one = M >= static_cast<std::int64_t>(K);
  std::int64_t remaining = M;
  if (zeros_get_one) {
    for (std::size_t b = 0; b < K; ++b) {
      if (variances[b] == 0) {
        a.budgets[b] = 1;
        --remaining;
      }
    }
  }
  if (n_pos == 0) {
    a.budgets[0] += remaining;
    return a;
  }
  double sum_sd = 0;
  for (double v : variances) sum_sd += std::sqrt(v);
  std::vector<double> frac(K, -1.0);
  std::int64_t assigned = 0;
  for (std::size_t b = 0; b < K; ++b) {
    if (variances[b] == 0) continue;
    const double exact = static_cast<double>(remaining) * std::sqrt(variances[b]) / sum_sd;
    const auto fl = static_cast<std::int64_t>(std::floor(exact));
    a.budgets[b] += fl;
    assigned += fl;
    frac[b] = exact - static_cast<double>(fl);
  }
  std::vector<std::size_t> order(K);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return frac[x] > frac[y]; });
  for (std::size_t i = 0; assigned < remaining; ++i) {
    ++a.budgets[order[i % K]];
    ++assigned;
  }
  // Every part with nonzero variance needs at least one shot.
  for (std::size_t b = 0; b < K; ++b) {
    if (variances[b] > 0 && a.budgets[b] == 0) {
      auto donor = std::max_element(a.budgets.begin(), a.budgets.end());
      --*donor;
      a.budgets[b] = 1;
    }
  }
  a.achieved_cost = allocation_cost(variances, a.budgets);
  return a;
}

double allocation_cost(const std::vector<double>& variances,
                       const std::vector<std::int64_t>& budgets) {
  if (variances.size() != budgets.size()) {
    throw std::invalid_argument("allocation size mismatch");
  }
  double c = 0;
  for (std::size_t b = 0; b < variances.size(); ++b) {
    if (variances[b] == 0) continue;
    if (budgets[b] <= 0) return std::numeric_limits<double>::infinity();
    c += variances[b] / static_cast<double>(budgets[b]);
  }
  return c;
}

double partition_cost(const std::vector<double>& variances) {
  double s = 0;
  for (double v : variances) s += std::sqrt(std::max(v, 0.0));
  return s * s;
}

std::vector<double> part_variances(const Partitioning& parts,
                                   const StateVector& psi) {
  std::vector<double> v;
  for (const auto& p : parts.parts) v.push_back(variance(p, psi));
  return v;
}

double partition_cost(const Partitioning& parts, const StateVector& psi) {
  return partition_cost(part_variances(parts, psi));
}

Sandwich variance_sandwich(const std::vector<double>& variances) {
  std::vector<double> v = variances;
  std::sort(v.begin(), v.end(), std::greater<>());
  Sandwich s;
  double sum = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    sum += v[k];
    s.lower += static_cast<double>(2 * k + 1) * v[k];
  }
  s.upper = static_cast<double>(v.size()) * sum;
  s.mid = partition_cost(v);
  return s;
}

std::string hypotheses_name(Hypotheses h) {
  switch (h) {
    case Hypotheses::kMet: return "met";
    case Hypotheses::kDegenerate: return "degenerate";
    case Hypotheses::kNotApplicable: return "not_applicable";
  }
  return "unknown";
}

std::optional<double> theorem1_bound(const PartitionSpec& spec,
                                     std::optional<double> cor_cut,
                                     const BoundOptions& opts) {
  switch (spec.kind) {
    case PartitionKind::kTwoLocal: return 4.0 / 3.0;
    case PartitionKind::kGeo1D:
    case PartitionKind::kGeo2D: {
      if (!cor_cut) throw std::invalid_argument("bound needs CoR(H_cut, H_cut')");
      const double c = *cor_cut;
      if (c < -1.0 - 1e-9 || c > 1.0 + 1e-9) {
        throw std::invalid_argument("correlation outside [-1, 1]");
      }
      if (c >= 1.0) return std::nullopt;
      if (spec.kind == PartitionKind::kGeo1D) {
        const double L = spec.L;
        if (opts.appendix_strict && spec.L >= 2) return 4 * L * (1 + c) / (1 - c);
        return 4 * L / (1 - c);
      }
      const double lx = spec.Lx, ly = spec.Ly;
      return 4 * (lx * ly / (lx + ly)) / (1 - c);
    }
    default:
      throw std::invalid_argument("no Theorem 1 bound for " + spec.label());
  }
}

namespace {

bool nearest_neighbour_spin_model(const LatticeHamiltonian& H) {
  switch (H.config.kind) {
    case ModelKind::kTFXYM:
    case ModelKind::kTFIM:
    case ModelKind::kHCBH: return true;
    default: return false;
  }
}

}  // namespace

ImprovementReport relative_complexity(const Partitioning& B1,
                                      const Partitioning& B2,
                                      const StateVector& psi,
                                      const LatticeHamiltonian* H,
                                      EigenstateInfo eig,
                                      const BoundOptions& opts) {
  ImprovementReport r;
  r.label_numerator = B1.label;
  r.label_denominator = B2.label;
  r.cost_numerator = partition_cost(B1, psi);
  r.cost_denominator = partition_cost(B2, psi);
  if (r.cost_denominator <= r.cost_numerator / kDivergenceRatio) {
    r.diverging = r.cost_numerator > 0;
    r.g = r.diverging ? std::numeric_limits<double>::infinity() : 1.0;
  } else {
    r.g = r.cost_numerator / r.cost_denominator;
  }
  if (H == nullptr || !B2.spec.geometric() || !eig.is_eigenstate) return r;
  if (!nearest_neighbour_spin_model(*H)) return r;
  r.hypotheses = eig.degenerate ? Hypotheses::kDegenerate : Hypotheses::kMet;
  if (B2.spec.kind == PartitionKind::kTwoLocal) {
    r.bound = theorem1_bound(B2.spec, std::nullopt, opts);
    return r;
  }
  if (B2.size() != 2) return r;
  const CutPair cut = make_cut_pair(*H, B2.spec);
  try {
    r.cor_cut = correlation(cut.h_cut, cut.h_cut_prime, psi);
    r.bound = theorem1_bound(B2.spec, r.cor_cut, opts);
  } catch (const UndefinedCorrelation&) {
    r.cor_cut.reset();
  }
  return r;
}

std::int64_t shots_for_confidence(double variance, double eps,
                                  double failure_prob) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  if (!(failure_prob > 0 && failure_prob < 1)) {
    throw std::invalid_argument("failure probability must lie in (0, 1)");
  }
  if (variance < 0) throw std::invalid_argument("negative variance");
  const double m = std::ceil(variance / (eps * eps * failure_prob) - 1e-9);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(m));
}

PerturbativePrediction tfim_perturbative_G(TfimRegime regime, int L,
                                           int seam_shift, double lambda) {
  if (L < 1) throw std::invalid_argument("strip width must be >= 1");
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
  PerturbativePrediction p;
  p.outside_validity = lambda > 0.1;
  if (regime == TfimRegime::kDisordered) {
    p.g = 4.0 * L;
    return p;
  }
  if (L <= 2) {
    p.scaling = "Theta(1/lambda^2)";
    return p;
  }
  p.g = (seam_shift <= 1 ? 32.0 : 16.0) * L;
  return p;
}

}  // namespace latshot
