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

#include "latshot/shot_sim.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

namespace latshot {

namespace {

int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

// Spreads the low bits of `local` onto the positions of `qubits`.
std::uint64_t deposit(std::uint64_t local, const std::vector<int>& qubits) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if ((local >> k) & 1U) out |= std::uint64_t{1} << qubits[k];
  }
  return out;
}

std::uint64_t gather(std::uint64_t index, const std::vector<int>& qubits) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    out |= ((index >> qubits[k]) & 1U) << k;
  }
  return out;
}

struct DenseBlock {
  std::vector<double> eigenvalues;
  std::vector<cplx> basis;
};

DenseBlock diagonalize_local(const PauliSum& local) {
  const int k = local.n_qubits();
  const Eigen::Index D = Eigen::Index{1} << k;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(D, D);
  for (const auto& [p, c] : local.terms()) {
    cplx phase(1, 0);
    for (int r = 0; r < popcount(p.x & p.z); ++r) phase *= cplx(0, 1);
    for (Eigen::Index j = 0; j < D; ++j) {
      const auto uj = static_cast<std::uint64_t>(j);
      const double sign = (popcount(uj & p.z) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(uj ^ p.x), j) += c * sign * phase;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw SamplerError("patch diagonalization failed");
  DenseBlock b;
  b.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + D);
  b.basis.assign(es.eigenvectors().data(), es.eigenvectors().data() + D * D);
  return b;
}

// Term supports joined into connected components.
std::vector<std::vector<int>> components(const PauliSum& part) {
  const int n = part.n_qubits();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& [p, c] : part.terms()) {
    int first = -1;
    for (int q = 0; q < n; ++q) {
      if (!((p.support() >> q) & 1U)) continue;
      used[q] = true;
      if (first < 0) {
        first = q;
      } else {
        parent[find(q)] = find(first);
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int q = 0; q < n; ++q) {
    if (used[q]) groups[find(q)].push_back(q);
  }
  std::vector<std::vector<int>> out;
  for (auto& [root, qs] : groups) out.push_back(std::move(qs));
  return out;
}

PauliSum restrict_to(const PauliSum& part, const std::vector<int>& qubits) {
  const std::uint64_t mask = deposit((std::uint64_t{1} << qubits.size()) - 1, qubits);
  PauliSum local(static_cast<int>(qubits.size()));
  for (const auto& [p, c] : part.terms()) {
    if (p.is_identity() || (p.support() & ~mask) != 0) continue;
    local.add(PauliString(static_cast<int>(qubits.size()), gather(p.x, qubits),
                          gather(p.z, qubits)),
              c);
  }
  return local;
}

bool qubitwise_letters(const PauliSum& part, std::vector<char>& letter) {
  letter.assign(static_cast<std::size_t>(part.n_qubits()), 'I');
  for (const auto& [p, c] : part.terms()) {
    for (int q = 0; q < part.n_qubits(); ++q) {
      const char l = p.op_at(q);
      if (l == 'I') continue;
      if (letter[q] != 'I' && letter[q] != l) return false;
      letter[q] = l;
    }
  }
  return true;
}

}  // namespace

PartSampler build_sampler(const PauliSum& part, const SamplerOptions& opts) {
  const int n = part.n_qubits();
  if (n > 30) throw SamplerError("sampler limited to 30 qubits");
  PartSampler s;
  s.part = part;
  const std::size_t dim = std::size_t{1} << n;
  s.values.assign(dim, part.identity_coefficient());

  std::vector<char> letter;
  if (qubitwise_letters(part, letter)) {
    s.product_basis = true;
    const double r = 1 / std::sqrt(2.0);
    for (int q = 0; q < n; ++q) {
      if (letter[q] == 'X') {
        s.rotations.push_back({{q}, {r, r, r, -r}});
      } else if (letter[q] == 'Y') {
        s.rotations.push_back({{q}, {r, cplx(0, r), r, cplx(0, -r)}});
      }
    }
    for (const auto& [p, c] : part.terms()) {
      if (p.is_identity()) continue;
      const std::uint64_t supp = p.support();
      for (std::size_t i = 0; i < dim; ++i) {
        s.values[i] += (popcount(i & supp) & 1) ? -c : c;
      }
    }
    return s;
  }

  std::map<std::string, DenseBlock> cache;
  for (const auto& qubits : components(part)) {
    if (static_cast<int>(qubits.size()) > opts.max_block_qubits) {
      throw SamplerError("measurement block of " + std::to_string(qubits.size()) +
                         " qubits exceeds the limit of " +
                         std::to_string(opts.max_block_qubits));
    }
    const PauliSum local = restrict_to(part, qubits);
    const std::string key = local.to_text();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, diagonalize_local(local)).first;
    s.rotations.push_back({qubits, it->second.basis});
    const auto& ev = it->second.eigenvalues;
    for (std::size_t i = 0; i < dim; ++i) s.values[i] += ev[gather(i, qubits)];
  }
  return s;
}

double OutcomeDistribution::mean() const {
  double num = 0;
  for (std::size_t i = 0; i < prob.size(); ++i) num += prob[i] * values[i];
  return num / cdf.back();
}

double OutcomeDistribution::variance() const {
  const double m = mean();
  double num = 0;
  for (std::size_t i = 0; i < prob.size(); ++i) {
    const double dv = values[i] - m;
    num += prob[i] * dv * dv;
  }
  return num / cdf.back();
}

OutcomeDistribution outcome_distribution(const PartSampler& s,
                                         const StateVector& psi) {
  if (psi.n_qubits != s.part.n_qubits()) {
    throw DimensionError("outcome_distribution: dimension mismatch");
  }
  std::vector<cplx> phi = psi.amp;
  const std::size_t dim = phi.size();
  std::vector<cplx> in, out;
  for (const auto& rot : s.rotations) {
    const std::size_t D = std::size_t{1} << rot.qubits.size();
    const std::uint64_t mask = deposit(D - 1, rot.qubits);
    std::vector<std::uint64_t> offset(D);
    for (std::size_t l = 0; l < D; ++l) offset[l] = deposit(l, rot.qubits);
    in.resize(D);
    out.resize(D);
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & mask) continue;
      for (std::size_t l = 0; l < D; ++l) in[l] = phi[base | offset[l]];
      for (std::size_t j = 0; j < D; ++j) {
        cplx acc = 0;
        const cplx* col = rot.basis.data() + j * D;
        for (std::size_t l = 0; l < D; ++l) acc += std::conj(col[l]) * in[l];
        out[j] = acc;
      }
      for (std::size_t l = 0; l < D; ++l) phi[base | offset[l]] = out[l];
    }
  }
  OutcomeDistribution d;
  d.values = s.values;
  d.prob.resize(dim);
  d.cdf.resize(dim);
  double run = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    d.prob[i] = std::norm(phi[i]);
    run += d.prob[i];
    d.cdf[i] = run;
  }
  if (!(run > 0)) throw SamplerError("state has zero norm");
  return d;
}

Allocation uniform_allocation(std::size_t parts, std::int64_t M) {
  if (parts == 0) throw std::invalid_argument("no parts to allocate");
  Allocation a;
  a.total = M;
  a.budgets.assign(parts, M / static_cast<std::int64_t>(parts));
  for (std::int64_t r = 0; r < M % static_cast<std::int64_t>(parts); ++r) ++a.budgets[r];
  return a;
}

EstimatorRun simulate_estimator(const Partitioning& B, const StateVector& psi,
                                const Allocation& allocation,
                                std::uint64_t seed, int trials,
                                const SamplerOptions& opts) {
  if (allocation.budgets.size() != B.size()) {
    throw std::invalid_argument("allocation does not match the partitioning");
  }
  if (trials < 2) throw std::invalid_argument("need at least two trials");
  const std::size_t K = B.size();
  std::vector<PartSampler> samplers;
  std::vector<OutcomeDistribution> dists;
  samplers.reserve(K);
  for (std::size_t b = 0; b < K; ++b) {
    if (allocation.budgets[b] <= 0) {
      throw std::invalid_argument("part " + std::to_string(b) + " has no shots");
    }
    samplers.push_back(build_sampler(B.parts[b], opts));
  }
  for (std::size_t b = 0; b < K; ++b) dists.push_back(outcome_distribution(samplers[b], psi));

  EstimatorRun run;
  run.label = B.label;
  run.budgets = allocation.budgets;
  run.M = std::accumulate(allocation.budgets.begin(), allocation.budgets.end(),
                          std::int64_t{0});
  run.trials = trials;
  run.estimates.assign(static_cast<std::size_t>(trials), 0.0);
  std::vector<double> part_sum(static_cast<std::size_t>(trials) * K, 0.0);

#pragma omp parallel for schedule(static)
  for (int t = 0; t < trials; ++t) {
    double est = 0;
    for (std::size_t b = 0; b < K; ++b) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(b)};
      std::mt19937_64 rng(seq);
      double acc = 0;
      for (std::int64_t m = 0; m < allocation.budgets[b]; ++m) {
        acc += sample_outcome(dists[b], rng);
      }
      const double mean = acc / static_cast<double>(allocation.budgets[b]);
      part_sum[static_cast<std::size_t>(t) * K + b] = mean;
      est += mean;
    }
    run.estimates[static_cast<std::size_t>(t)] = est;
  }

  run.part_means.assign(K, 0.0);
  for (int t = 0; t < trials; ++t) {
    for (std::size_t b = 0; b < K; ++b) {
      run.part_means[b] += part_sum[static_cast<std::size_t>(t) * K + b] / trials;
    }
    run.estimate += run.estimates[static_cast<std::size_t>(t)] / trials;
  }
  double ss = 0;
  for (double e : run.estimates) ss += (e - run.estimate) * (e - run.estimate);
  run.empirical_variance = ss / (trials - 1);
  run.empirical_stderr = std::sqrt(run.empirical_variance);
  return run;
}

EstimatorRun simulate_estimator(const Partitioning& B, const StateVector& psi,
                                std::int64_t M, std::uint64_t seed, int trials,
                                const SamplerOptions& opts) {
  return simulate_estimator(B, psi, optimal_allocation(part_variances(B, psi), M),
                            seed, trials, opts);
}

PredictionCheck compare_predictions(const EstimatorRun& run,
                                    double predicted_cost, std::int64_t M) {
  if (run.trials < 30) throw std::invalid_argument("need at least 30 trials");
  if (M <= 0) throw std::invalid_argument("M must be positive");
  PredictionCheck c;
  c.empirical_variance = run.empirical_variance;
  c.predicted_variance = predicted_cost / static_cast<double>(M);
  const double spread = std::sqrt(2.0 / (run.trials - 1));
  c.se = c.predicted_variance * spread;
  if (c.se == 0) {
    // Eigenvalue rounding leaves a tiny spread on exact eigenstates.
    const double tol = 1e-12 * std::max(1.0, run.estimate * run.estimate);
    c.z = c.empirical_variance <= tol ? 0.0 : std::numeric_limits<double>::infinity();
    return c;
  }
  c.z = (c.empirical_variance - c.predicted_variance) / c.se;
  return c;
}

}  // namespace latshot
