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
#include <random>
#include <vector>

#include "common.hpp"
#include "latshot/lattice.hpp"
#include "latshot/oracle/dense.hpp"
#include "latshot/oracle/fock.hpp"
#include "latshot/shot_sim.hpp"

namespace latshot::verify {

using detail::add;
using detail::say;

CheckResult shot_calibration(const Options& opts) {
  detail::Stopwatch sw;
  CheckResult r;
  r.id = 8;
  r.title = "shot simulator calibration against (sum sqrt Var)^2 / M";
  r.budget_seconds = 300;
  const std::int64_t M = 4000;
  const int trials = opts.size == Size::kSmall ? 60 : 200;
  const LatticeHamiltonian H = build_tfim(build_lattice(4, 3), 1.0, 1.0);
  const EigenSolution gs = ground_state(H.pauli(), 1);
  const StateVector& psi = gs.states[0];
  double emp[2] = {0, 0}, cost[2] = {0, 0};
  const PartitionSpec specs[2] = {PartitionSpec::pauli(), PartitionSpec::geo1d(2)};
  for (int i = 0; i < 2; ++i) {
    const Partitioning B = make_partition(H, specs[i]);
    const EstimatorRun run = simulate_estimator(B, psi, M, opts.seed + i, trials);
    cost[i] = partition_cost(B, psi);
    const PredictionCheck c = compare_predictions(run, cost[i], M);
    emp[i] = run.empirical_variance;
    add(r, B.label + " variance", std::abs(c.z) <= 3,
        fmt::format("empirical={:.5g} predicted={:.5g} z={:+.2f}", c.empirical_variance,
                    c.predicted_variance, c.z));
    const double bias = std::abs(run.estimate - gs.energies[0]);
    add(r, B.label + " unbiased", bias <= 4 * run.empirical_stderr / std::sqrt(trials),
        fmt::format("mean={:.8g} E0={:.8g}", run.estimate, gs.energies[0]));
    r.data[B.label] = {{"empirical_variance", c.empirical_variance},
                       {"predicted_variance", c.predicted_variance}, {"z", c.z},
                       {"estimate", run.estimate}, {"budgets", run.budgets}};
    say(opts, "  " + r.checks[r.checks.size() - 2].detail);
  }
  const double g = cost[0] / cost[1];
  const double ratio = emp[0] / emp[1];
  // Two independent chi-square variances: relative se of the ratio is
  // sqrt(2/(T-1)) per factor.
  const double se = g * std::sqrt(4.0 / (trials - 1));
  const double z = (ratio - g) / se;
  add(r, "variance ratio reproduces g", std::abs(z) <= 3,
      fmt::format("empirical ratio={:.4g} g={:.4g} z={:+.2f}", ratio, g, z));
  r.data["ratio"] = ratio;
  r.data["g"] = g;
  r.seconds = sw.seconds();
  return r;
}

namespace {

std::vector<cplx> random_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0, 1);
  std::vector<cplx> v(dim);
  for (auto& a : v) {
    const double re = n(rng);
    a = cplx(re, n(rng));
  }
  return v;
}

}  // namespace

CheckResult oracle_equivalence(const Options& opts) {
  detail::Stopwatch sw;
  CheckResult r;
  r.id = 9;
  r.title = "oracle equivalence at n <= 9";
  r.budget_seconds = 180;
  const Lattice lat = build_lattice(3, 3);
  for (const auto& cfg : detail::reference_models()) {
    const LatticeHamiltonian H = build_model(lat, cfg);
    const PauliSum h = H.pauli();
    const std::string name = cfg.describe();
    const Eigen::MatrixXcd dense = oracle::dense_matrix(h);

    const std::vector<cplx> v = random_vector(dense.rows(), opts.seed);
    const std::vector<cplx> hv = CompiledOperator(h).apply(v);
    const Eigen::VectorXcd ref =
        dense * Eigen::Map<const Eigen::VectorXcd>(v.data(), dense.rows());
    double diff = 0;
    for (Eigen::Index i = 0; i < ref.size(); ++i) {
      diff = std::max(diff, std::abs(ref(i) - hv[static_cast<std::size_t>(i)]));
    }
    add(r, name + " matrix-free vs dense", diff <= 1e-10, fmt::format("max diff {:.3g}", diff));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
    const double e_ref = es.eigenvalues()(0);
    SolverOptions lz;
    lz.force_lanczos = true;
    const EigenSolution sl = ground_state(h, 1, lz);
    SolverOptions dn;
    dn.force_dense = true;
    const EigenSolution sd = ground_state(h, 1, dn);
    const double tol = 1e-9 * std::max(1.0, std::abs(e_ref));
    add(r, name + " Lanczos vs dense E0", std::abs(sl.energies[0] - e_ref) <= tol,
        fmt::format("lanczos={:.12f} oracle={:.12f}", sl.energies[0], e_ref));
    add(r, name + " dense path vs oracle E0", std::abs(sd.energies[0] - e_ref) <= tol,
        fmt::format("library={:.12f} oracle={:.12f}", sd.energies[0], e_ref));

    const Eigen::VectorXcd psi = oracle::to_eigen(sd.states[0]);
    double fro_diff = 0, var_diff = 0, samp_diff = 0;
    for (const PartitionSpec& spec : {PartitionSpec::pauli(), PartitionSpec::geo1d(1)}) {
      const Partitioning B = make_partition(H, spec);
      for (const PauliSum& part : B.parts) {
        const Eigen::MatrixXcd pm = oracle::dense_matrix(part);
        fro_diff = std::max(fro_diff, std::abs(frobenius_norm_sq_over_d(part) -
                                               oracle::dense_frobenius_sq_over_d(pm)));
        const double v_ref = oracle::dense_variance(pm, psi);
        var_diff = std::max(var_diff, std::abs(variance(part, sd.states[0]) - v_ref));
        const PartSampler s = build_sampler(part);
        const OutcomeDistribution dist = outcome_distribution(s, sd.states[0]);
        samp_diff = std::max({samp_diff,
                              std::abs(dist.mean() - oracle::dense_expectation(pm, psi)),
                              std::abs(dist.variance() - v_ref)});
      }
    }
    add(r, name + " Frobenius coefficients vs trace", fro_diff <= 1e-9,
        fmt::format("max diff {:.3g}", fro_diff));
    add(r, name + " part variances vs dense", var_diff <= 1e-9,
        fmt::format("max diff {:.3g}", var_diff));
    add(r, name + " sampler distribution moments", samp_diff <= 1e-9,
        fmt::format("max diff {:.3g}", samp_diff));
    say(opts, "  " + name + " done");
  }

  {
    const Lattice l = build_lattice(3, 2);
    const Eigen::MatrixXcd jw =
        oracle::dense_matrix(build_spinless_hubbard(l, 1.0, 1.0, 0.3).pauli());
    const Eigen::MatrixXd fock = oracle::fock_spinless_hubbard(l, 1.0, 1.0, 0.3);
    const double diff = (jw - fock.cast<cplx>()).cwiseAbs().maxCoeff();
    add(r, "spinless Hubbard JW vs Fock space", diff <= 1e-12, fmt::format("max diff {:.3g}", diff));
  }
  {
    const Lattice l = build_lattice(2, 2, 2);
    const Eigen::MatrixXcd jw = oracle::dense_matrix(build_hubbard(l, 1.0, 2.0, 0.4).pauli());
    const Eigen::MatrixXd fock = oracle::fock_hubbard(l, 1.0, 2.0, 0.4);
    const double diff = (jw - fock.cast<cplx>()).cwiseAbs().maxCoeff();
    add(r, "Hubbard JW vs Fock space", diff <= 1e-12, fmt::format("max diff {:.3g}", diff));
  }
  {
    const std::vector<double> vars{9, 4, 1};
    const Allocation a = optimal_allocation(vars, 60);
    const double brute = oracle::brute_force_allocation_cost(vars, 60);
    add(r, "allocation vs exhaustive search", a.achieved_cost <= brute * (1 + 1e-12),
        fmt::format("allocation cost {:.10g}, exhaustive {:.10g}", a.achieved_cost, brute));
  }
  r.seconds = sw.seconds();
  return r;
}

CheckResult hubbard_structure(const Options& opts) {
  detail::Stopwatch sw;
  CheckResult r;
  r.id = 10;
  r.title = "spinless Hubbard 2x3 structure";
  r.budget_seconds = 120;
  const Lattice lat = build_lattice(2, 3);
  const LatticeHamiltonian H = build_spinless_hubbard(lat, 1.0, 1.0, 0.0);
  const PauliSum h = H.pauli();
  const Partitioning pauli = make_partition(H, PartitionSpec::pauli());
  add(r, "baseline has 5 groups", pauli.size() == 5, fmt::format("{} groups", pauli.size()));
  const PartitionReport rep = validate_partition(pauli, h);
  add(r, "baseline groups commute and sum to H", rep.ok(),
      fmt::format("residual {:.3g}, {} commutation violations", rep.residual,
                  rep.commutation_violations.size()));

  const Eigen::MatrixXcd hm = oracle::dense_matrix(h);
  const Eigen::MatrixXcd nm = oracle::dense_matrix(number_operator(h.n_qubits()));
  const double comm = (hm * nm - nm * hm).cwiseAbs().maxCoeff();
  add(r, "[H, N] = 0", comm <= 1e-12, fmt::format("max |[H,N]| entry {:.3g}", comm));

  const EigenSolution gs = ground_state(h, 1);
  const StateVector& psi = gs.states[0];
  const Partitioning geo = make_partition(H, PartitionSpec::geo1d(1));
  const double g = partition_cost(pauli, psi) / partition_cost(geo, psi);
  add(r, "g(Geo1D(1)) >= 1", g >= 1,
      fmt::format("g={:.6g} gap={:.3g}{}", g, gs.gap,
                  gs.degenerate ? " (degenerate ground state, informational)" : ""));
  r.data = {{"groups", pauli.size()}, {"g", g}, {"E0", gs.energies[0]},
            {"gap", gs.gap}, {"degenerate", gs.degenerate},
            {"N", expectation(number_operator(h.n_qubits()), psi)}};
  say(opts, "  " + r.checks.back().detail);
  r.seconds = sw.seconds();
  return r;
}

}  // namespace latshot::verify
