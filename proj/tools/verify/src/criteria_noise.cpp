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

#include <cmath>
#include <vector>

#include "common.hpp"
#include "latshot/lattice.hpp"

namespace latshot::verify {

using detail::add;
using detail::say;

namespace {

struct NoisyInstance {
  std::string name;
  double d = 0;
  double energy = 0;
  double frob_h = 0;
  double g0 = 0;
  std::vector<MomentStats> pauli, geo;
  MomentStats whole;
};

NoisyInstance noisy_instance(int nx, int ny, int L) {
  const LatticeHamiltonian H = build_tfim(build_lattice(nx, ny), 1.0, 1.0);
  const PauliSum h = H.pauli();
  const EigenSolution gs = ground_state(h, 1);
  const StateVector& psi = gs.states[0];
  NoisyInstance in;
  in.name = fmt::format("tfim {}x{} geo1d_L{}", ny, nx, L);
  in.d = std::ldexp(1.0, h.n_qubits());
  in.energy = gs.energies[0];
  in.frob_h = frobenius_norm_sq_over_d(h);
  const Partitioning pauli = make_partition(H, PartitionSpec::pauli());
  const Partitioning geo = make_partition(H, PartitionSpec::geo1d(L));
  in.pauli = moment_stats(pauli, psi);
  in.geo = moment_stats(geo, psi);
  in.whole = moment_stats(h, psi, "whole");
  in.g0 = partition_cost(pauli, psi) / partition_cost(geo, psi);
  return in;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) {
    v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  }
  return v;
}

}  // namespace

CheckResult perturbed_monte_carlo(const Options& opts) {
  detail::Stopwatch sw;
  CheckResult r;
  r.id = 5;
  r.title = "Haar-perturbed variance: Monte Carlo vs closed form";
  r.budget_seconds = 600;
  const int samples = opts.size == Size::kSmall ? 2000 : 20000;
  const LatticeHamiltonian H = build_tfim(build_chain(10), 1.0, 1.0);
  const PauliSum h = H.pauli();
  const EigenSolution gs = ground_state(h, 1);
  const StateVector& psi = gs.states[0];
  const double d = std::ldexp(1.0, h.n_qubits());
  const std::vector<PauliSum> ops{
      h, make_partition(H, PartitionSpec::pauli()).parts[0],
      make_partition(H, PartitionSpec::geo1d(2)).parts[0]};
  const std::vector<std::string> names{"whole", "pauli[0]", "geo1d_L2[0]"};
  std::vector<MomentStats> stats;
  for (std::size_t k = 0; k < ops.size(); ++k) stats.push_back(moment_stats(ops[k], psi, names[k]));

  r.data["samples"] = samples;
  for (double eps : {0.01, 0.1, 0.5, 0.9}) {
    const auto mc = mc_perturbed_variance(ops, psi, eps, samples,
                                          opts.seed + static_cast<std::uint64_t>(eps * 1000));
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const MomentStats& s = stats[k];
      const double full = expected_variance(s, eps, d, false);
      const double trunc = expected_variance(s, eps, d, true);
      const double c0 = s.identity_coeff;
      const double second = s.second_moment - 2 * c0 * s.mean + c0 * c0;
      const double z_full = (mc[k].mean - full) / mc[k].stderr_;
      const double trunc_tol = 3 * mc[k].stderr_ + 2 * second / d;
      const std::string tag = fmt::format("{} eps={}", names[k], eps);
      add(r, tag + " full form", std::abs(z_full) <= 3,
          fmt::format("MC={:.8g}+-{:.2g} full={:.8g} z={:+.2f}", mc[k].mean,
                      mc[k].stderr_, full, z_full));
      add(r, tag + " truncated form", std::abs(mc[k].mean - trunc) <= trunc_tol,
          fmt::format("|MC-trunc|={:.3g} tol={:.3g}", std::abs(mc[k].mean - trunc), trunc_tol));
      r.data["rows"].push_back({{"part", names[k]}, {"eps", eps}, {"mc", mc[k].mean},
                                {"stderr", mc[k].stderr_}, {"full", full},
                                {"truncated", trunc}, {"z_full", z_full}});
    }
    say(opts, fmt::format("  eps={} done", eps));
  }
  r.seconds = sw.seconds();
  return r;
}

CheckResult noisy_bounds(const Options& opts) {
  detail::Stopwatch sw;
  CheckResult r;
  r.id = 6;
  r.title = "noisy improvement bounds, regime-II caps and eps -> 0 limit";
  r.budget_seconds = 120;
  struct Shape {
    int nx, ny, L;
  };
  const std::vector<Shape> shapes{{3, 3, 1}, {4, 3, 1}, {4, 3, 2}};
  const std::vector<double> grid = log_grid(1e-4, 0.9, 20);
  for (const auto& sh : shapes) {
    const NoisyInstance in = noisy_instance(sh.nx, sh.ny, sh.L);
    const std::vector<MomentStats> whole{in.whole};
    int upper_bad = 0, lower_bad = 0, cap_bad = 0;
    double worst_lower = 0, worst_cap_geo = 0, worst_cap_pauli = 0;
    const double bI_geo = regime_classify(0, in.geo[0].variance, in.energy, in.frob_h).boundary_low;
    const double bI_pauli = regime_classify(0, in.pauli[0].variance, in.energy, in.frob_h).boundary_low;
    nlohmann::json rows = nlohmann::json::array();
    for (double eps : grid) {
      const double G = ensemble_complexity(in.pauli, in.geo, eps, in.d);
      const Corollary3Bounds b = corollary3_bounds(in.pauli, in.geo, in.energy, in.frob_h, eps);
      if (G > b.upper * (1 + 1e-12)) ++upper_bad;
      if (G < b.lower * (1 - 1e-12)) {
        ++lower_bad;
        worst_lower = std::max(worst_lower, b.lower / G - 1);
      }
      const double cap_geo = ensemble_complexity(in.geo, whole, eps, in.d);
      const double cap_pauli = ensemble_complexity(in.pauli, whole, eps, in.d);
      if (eps > bI_geo) {
        worst_cap_geo = std::max(worst_cap_geo, cap_geo);
        if (cap_geo > 2.05) ++cap_bad;
      }
      if (eps > bI_pauli) {
        worst_cap_pauli = std::max(worst_cap_pauli, cap_pauli);
        if (cap_pauli > 3.05) ++cap_bad;
      }
      const RegimeReport reg = regime_classify(eps, in.pauli[0].variance, in.energy, in.frob_h);
      rows.push_back({{"eps", eps}, {"G", G}, {"lower", b.lower}, {"upper", b.upper},
                      {"regime", regime_name(reg.regime)},
                      {"cap_geo", cap_geo}, {"cap_pauli", cap_pauli}});
    }
    add(r, in.name + " G <= upper", upper_bad == 0,
        fmt::format("{} of {} grid points above the upper bound", upper_bad, grid.size()));
    add(r, in.name + " G >= lower", lower_bad == 0,
        fmt::format("{} of {} grid points below the lower bound, worst excess {:.3g}%",
                    lower_bad, grid.size(), 100 * worst_lower));
    add(r, in.name + " regime-II caps", cap_bad == 0,
        fmt::format("max Gbar(geo, H)={:.4f} above eps={:.3g}; max Gbar(pauli, H)={:.4f} above eps={:.3g}",
                    worst_cap_geo, bI_geo, worst_cap_pauli, bI_pauli));
    const double g_small = ensemble_complexity(in.pauli, in.geo, 1e-9, in.d);
    const double rel = std::abs(g_small / in.g0 - 1);
    add(r, in.name + " eps->0 limit", rel <= 0.01,
        fmt::format("Gbar(1e-9)={:.8g} g={:.8g} rel={:.3g}", g_small, in.g0, rel));
    r.data[in.name] = {{"g0", in.g0}, {"energy", in.energy}, {"frob_h", in.frob_h},
                       {"regime_I_geo", bI_geo}, {"regime_I_pauli", bI_pauli},
                       {"rows", rows}};
    say(opts, "  " + in.name + " done");
  }
  r.seconds = sw.seconds();
  return r;
}

CheckResult epsilon_thresholds(const Options& opts) {
  detail::Stopwatch sw;
  CheckResult r;
  r.id = 7;
  r.title = "noise thresholds: eps_P/eps_geo vs g delta/(delta - alpha^2)";
  r.budget_seconds = 180;
  const NoisyInstance small = noisy_instance(3, 3, 1);
  // Geo1D(2) at n=12: its two parts are translates of each other, so the
  // geometric asymmetry vanishes. Geo1D(1) on 4x3 splits rows from columns
  // and is not symmetric.
  const NoisyInstance large = noisy_instance(4, 3, 2);
  for (const NoisyInstance* in : {&small, &large}) {
    const double alpha_geo = asymmetries(in->geo, in->energy, in->frob_h).alpha;
    add(r, in->name + " alpha(geo) = 0", alpha_geo <= 1e-9,
        fmt::format("alpha={:.3g}", alpha_geo));
  }
  for (double delta : {3.0, 5.0, 10.0}) {
    double rel[2] = {NAN, NAN};
    const NoisyInstance* ins[2] = {&small, &large};
    for (int i = 0; i < 2; ++i) {
      const NoisyInstance& in = *ins[i];
      const ThresholdReport tp = epsilon_threshold(in.pauli, in.whole, in.energy, in.d, delta);
      const ThresholdReport tg = epsilon_threshold(in.geo, in.whole, in.energy, in.d, delta);
      if (!tp.eps_threshold_numeric || !tg.eps_threshold_numeric) continue;
      const double ratio = *tp.eps_threshold_numeric / *tg.eps_threshold_numeric;
      const double pred = predicted_threshold_ratio(in.g0, tp.alpha, delta);
      rel[i] = ratio / pred - 1;
      r.data[in.name].push_back({{"delta", delta}, {"eps_pauli", *tp.eps_threshold_numeric},
                                 {"eps_geo", *tg.eps_threshold_numeric},
                                 {"eps_pauli_closed", tp.eps_threshold_closed.value_or(NAN)},
                                 {"eps_geo_closed", tg.eps_threshold_closed.value_or(NAN)},
                                 {"ratio", ratio}, {"predicted", pred}, {"rel", rel[i]}});
      say(opts, fmt::format("  {} delta={} ratio={:.5g} predicted={:.5g} rel={:+.4f}",
                            in.name, delta, ratio, pred, rel[i]));
    }
    add(r, fmt::format("delta={} n=12 within 25%", delta), std::abs(rel[1]) <= 0.25,
        fmt::format("relative deviation {:+.4f}", rel[1]));
    add(r, fmt::format("delta={} deviation shrinks n=9 -> n=12", delta),
        std::abs(rel[1]) < std::abs(rel[0]),
        fmt::format("n=9 {:+.4f}, n=12 {:+.4f}", rel[0], rel[1]));
  }
  r.seconds = sw.seconds();
  return r;
}

}  // namespace latshot::verify
