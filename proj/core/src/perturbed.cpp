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

#include "latshot/perturbed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace latshot {

void NoiseConfig::validate() const {
  if (!(eps >= 0 && eps <= 1)) {
    throw std::invalid_argument("noise eps must lie in [0, 1]");
  }
  if (samples < 1) throw std::invalid_argument("noise samples must be >= 1");
}

StateVector haar_sample(int n_qubits, std::mt19937_64& rng) {
  StateVector xi(n_qubits);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& a : xi.amp) {
    const double re = gauss(rng);
    a = cplx(re, gauss(rng));
  }
  const double nrm = std::sqrt(norm_sq(xi.amp));
  for (auto& a : xi.amp) a /= nrm;
  xi.provenance = "haar";
  return xi;
}

StateVector haar_sample(int n_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_sample(n_qubits, rng);
}

StateVector perturbed_state(const StateVector& psi, const StateVector& xi,
                            double eps) {
  if (psi.n_qubits != xi.n_qubits || psi.dim() != xi.dim()) {
    throw DimensionError("perturbed_state: dimension mismatch");
  }
  if (!(eps >= 0 && eps <= 1)) throw std::invalid_argument("eps outside [0, 1]");
  StateVector out(psi.n_qubits);
  const double a = std::sqrt(1 - eps), b = std::sqrt(eps);
  for (std::size_t i = 0; i < out.dim(); ++i) out.amp[i] = a * psi.amp[i] + b * xi.amp[i];
  out.normalized = false;
  char buf[96];
  std::snprintf(buf, sizeof buf, "perturbed eps=%.17g norm=%.17g", eps, out.norm());
  out.provenance = buf;
  return out;
}

double expected_variance(const MomentStats& s, double eps, double d,
                         bool truncate) {
  const double c0 = s.identity_coeff;
  const double mean = s.mean - c0;
  const double second = s.second_moment - 2 * c0 * s.mean + c0 * c0;
  const double f = s.frob_sq_over_d;
  double r = (1 - eps) * s.variance + eps * (1 - eps) * mean * mean + eps * f;
  if (!truncate) {
    r -= 2 * eps * (1 - eps) * second / d + eps * eps * f / (d + 1);
  }
  return std::max(r, 0.0);
}

namespace {

double sum_sqrt_expected(const std::vector<MomentStats>& parts, double eps,
                         double d, bool truncate) {
  double s = 0;
  for (const auto& p : parts) s += std::sqrt(expected_variance(p, eps, d, truncate));
  return s;
}

}  // namespace

double ensemble_complexity(const std::vector<MomentStats>& b1,
                           const std::vector<MomentStats>& b2, double eps,
                           double d, bool truncate) {
  const double num = sum_sqrt_expected(b1, eps, d, truncate);
  const double den = sum_sqrt_expected(b2, eps, d, truncate);
  if (den == 0) return num == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return (num / den) * (num / den);
}

AsymmetryStats asymmetries(const std::vector<MomentStats>& parts, double energy,
                           double frob_h) {
  if (parts.empty()) throw std::invalid_argument("asymmetries: no parts");
  if (energy == 0) {
    throw UndefinedAsymmetry("alpha undefined for a zero-energy eigenstate");
  }
  if (frob_h <= 0) throw UndefinedAsymmetry("beta undefined for H proportional to 1");
  AsymmetryStats a;
  a.alpha = std::abs(parts[0].mean / energy - 0.5);
  a.beta = std::abs(parts[0].frob_sq_over_d / frob_h - 0.5);
  for (const auto& p : parts) {
    a.beta_max = std::max(a.beta_max, std::abs(p.frob_sq_over_d / frob_h - 0.5));
  }
  return a;
}

double g_part(const std::vector<MomentStats>& parts, double energy,
              double frob_h, double eps) {
  const AsymmetryStats a = asymmetries(parts, energy, frob_h);
  return 4 * (1 - eps) * parts[0].variance + eps * (1 + a.beta) * frob_h +
         eps * (1 - eps) * (1 + a.alpha * a.alpha) * energy * energy;
}

Corollary3Bounds corollary3_bounds(const std::vector<MomentStats>& pauli,
                                   const std::vector<MomentStats>& geo,
                                   double energy, double frob_h, double eps) {
  if (!(eps > 0 && eps < 1)) {
    throw std::invalid_argument("corollary3_bounds needs eps in (0, 1)");
  }
  const double k = static_cast<double>(pauli.size());
  Corollary3Bounds b;
  b.upper = k + k * k * pauli[0].variance /
                    (eps * energy * energy + eps / (1 - eps) * frob_h);
  b.lower = g_part(pauli, energy, frob_h, eps) / g_part(geo, energy, frob_h, eps);
  return b;
}

double frobenius_criterion(const std::vector<PauliSum>& b1,
                           const std::vector<PauliSum>& b2) {
  double num = 0, den = 0;
  for (const auto& p : b1) num += std::sqrt(frobenius_norm_sq_over_d(p));
  for (const auto& p : b2) den += std::sqrt(frobenius_norm_sq_over_d(p));
  if (den == 0) return num == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return (num / den) * (num / den);
}

double frobenius_criterion(const Partitioning& b1, const Partitioning& b2) {
  return frobenius_criterion(b1.parts, b2.parts);
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kI: return "I";
    case Regime::kII: return "II";
    case Regime::kIII: return "III";
  }
  return "?";
}

RegimeReport regime_classify(double eps, double var_part1, double energy,
                             double frob_h) {
  if (energy == 0) throw UndefinedAsymmetry("regimes undefined for E = 0");
  RegimeReport r;
  r.boundary_low = 4 * var_part1 / (energy * energy);
  r.boundary_high = 1 - frob_h / (energy * energy);
  r.overlapping = r.boundary_low >= r.boundary_high;
  if (eps <= r.boundary_low) {
    r.regime = Regime::kI;
  } else if (eps >= r.boundary_high) {
    r.regime = Regime::kIII;
  } else {
    r.regime = Regime::kII;
  }
  return r;
}

ThresholdReport epsilon_threshold(const std::vector<MomentStats>& parts,
                                  const MomentStats& whole, double energy,
                                  double d, double delta) {
  if (parts.empty()) throw std::invalid_argument("epsilon_threshold: no parts");
  if (energy == 0) throw UndefinedAsymmetry("alpha undefined for E = 0");
  ThresholdReport t;
  t.delta = delta;
  t.alpha = std::abs(parts[0].mean / energy - 0.5);
  if (delta > t.alpha * t.alpha) {
    t.eps_threshold_closed =
        4 * parts[0].variance / (energy * energy * (delta - t.alpha * t.alpha));
  }
  const std::vector<MomentStats> w{whole};
  auto f = [&](double e) { return ensemble_complexity(parts, w, e, d) - (delta + 1); };
  double lo = 1e-12, hi = 1.0;
  t.f_low = f(lo);
  t.f_high = f(hi);
  if (!(t.f_low > 0 && t.f_high <= 0)) return t;
  while (hi - lo > 1e-10 * hi) {
    const double mid = hi / lo > 10 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (f(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  t.eps_threshold_numeric = 0.5 * (lo + hi);
  return t;
}

double predicted_threshold_ratio(double g, double alpha_pauli, double delta) {
  return g * delta / (delta - alpha_pauli * alpha_pauli);
}

std::vector<MonteCarloEstimate> mc_perturbed_variance(
    const std::vector<PauliSum>& ops, const StateVector& psi, double eps,
    int samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  std::vector<CompiledOperator> compiled;
  for (const auto& o : ops) {
    if (o.n_qubits() != psi.n_qubits) {
      throw DimensionError("mc_perturbed_variance: dimension mismatch");
    }
    compiled.emplace_back(traceless_part(o));
  }
  const std::size_t K = ops.size();
  std::vector<double> sum(K, 0), sum_sq(K, 0);
  std::vector<cplx> scratch(psi.dim());
  for (int t = 0; t < samples; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    const StateVector pt = perturbed_state(psi, haar_sample(psi.n_qubits, rng), eps);
    for (std::size_t k = 0; k < K; ++k) {
      compiled[k].apply(pt.amp.data(), scratch.data());
      const double m = inner(pt.amp, scratch).real();
      const double v = norm_sq(scratch) - m * m;
      sum[k] += v;
      sum_sq[k] += v * v;
    }
  }
  std::vector<MonteCarloEstimate> out(K);
  const double n = samples;
  for (std::size_t k = 0; k < K; ++k) {
    out[k].mean = sum[k] / n;
    const double var = std::max(0.0, (sum_sq[k] - n * out[k].mean * out[k].mean) / (n - 1));
    out[k].stderr_ = std::sqrt(var / n);
  }
  return out;
}

}  // namespace latshot
