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

#include "experiment.hpp"

#include <omp.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "latshot/lattice.hpp"
#include "latshot/metrics.hpp"
#include "latshot/perturbed.hpp"
#include "latshot/shot_sim.hpp"
#include "latshot/spectral.hpp"

#ifndef LATSHOT_VERSION
#define LATSHOT_VERSION "unknown"
#endif

namespace latshot::tools {

namespace fs = std::filesystem;
using nlohmann::json;

int ExperimentConfig::n_qubits() const {
  return lattice.nx * lattice.ny * lattice.layers;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("'{}': {}", key, e.what()));
  }
}

void reject_unknown(const json& j, const std::vector<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [k, v] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw ConfigError(fmt::format("unknown key '{}' in {}", k, where));
    }
  }
}

ModelConfig parse_model(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError("model must be an object with a 'kind'");
  }
  ModelConfig m;
  try {
    m.kind = parse_model_kind(j.at("kind").get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(std::string("model.kind: ") + e.what());
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "kind") continue;
    std::optional<double>* slot = m.coupling(k);
    const auto names = ModelConfig::coupling_names(m.kind);
    if (slot == nullptr || std::find(names.begin(), names.end(), k) == names.end()) {
      throw ConfigError(fmt::format("model {} has no coupling '{}'", model_name(m.kind), k));
    }
    if (!v.is_number()) throw ConfigError(fmt::format("coupling '{}' must be a number", k));
    *slot = v.get<double>();
  }
  try {
    m.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
  return m;
}

ScanConfig parse_scan(const json& j) {
  reject_unknown(j, {"parameter", "values", "start", "stop", "points", "spacing"}, "scan");
  ScanConfig s;
  s.parameter = get_or<std::string>(j, "parameter", "");
  if (s.parameter.empty()) throw ConfigError("scan.parameter is required");
  if (j.contains("values")) {
    s.values = get_or<std::vector<double>>(j, "values", {});
  } else {
    const double a = get_or<double>(j, "start", NAN), b = get_or<double>(j, "stop", NAN);
    const int n = get_or<int>(j, "points", 0);
    const std::string spacing = get_or<std::string>(j, "spacing", "linear");
    if (std::isnan(a) || std::isnan(b) || n < 1) {
      throw ConfigError("scan needs 'values' or 'start', 'stop' and 'points'");
    }
    if (spacing != "linear" && spacing != "log") {
      throw ConfigError("scan.spacing must be 'linear' or 'log'");
    }
    if (spacing == "log" && (a <= 0 || b <= 0)) {
      throw ConfigError("log spacing needs positive start and stop");
    }
    for (int i = 0; i < n; ++i) {
      const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
      s.values.push_back(spacing == "log" ? a * std::pow(b / a, t) : a + (b - a) * t);
    }
  }
  if (s.values.empty()) throw ConfigError("scan has no values");
  return s;
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j, {"model", "lattice", "partitionings", "scan", "noise", "simulate",
                     "output", "seed"},
                 "config");
  ExperimentConfig c;
  c.source = j;
  if (!j.contains("model")) throw ConfigError("config needs a 'model'");
  c.model = parse_model(j.at("model"));
  if (j.contains("lattice")) {
    const json& l = j.at("lattice");
    reject_unknown(l, {"nx", "ny", "layers", "periodic"}, "lattice");
    c.lattice.nx = get_or<int>(l, "nx", 4);
    c.lattice.ny = get_or<int>(l, "ny", 3);
    c.lattice.layers = get_or<int>(l, "layers", c.model.kind == ModelKind::kHubbard ? 2 : 1);
    c.lattice.periodic = get_or<bool>(l, "periodic", true);
  } else if (c.model.kind == ModelKind::kHubbard) {
    c.lattice.layers = 2;
  }
  for (const auto& label : get_or<std::vector<std::string>>(
           j, "partitionings", {"pauli", "geo1d_L1"})) {
    try {
      c.partitionings.push_back(PartitionSpec::parse(label));
    } catch (const std::exception& e) {
      throw ConfigError(fmt::format("partitioning '{}': {}", label, e.what()));
    }
  }
  if (j.contains("scan")) c.scan = parse_scan(j.at("scan"));
  if (j.contains("noise")) {
    const json& n = j.at("noise");
    reject_unknown(n, {"eps", "samples", "truncate"}, "noise");
    NoiseSettings s;
    s.eps = get_or<std::vector<double>>(n, "eps", {});
    s.samples = get_or<int>(n, "samples", 0);
    s.truncate = get_or<bool>(n, "truncate", false);
    for (double e : s.eps) {
      if (!(e > 0 && e < 1)) throw ConfigError("noise.eps values must lie in (0, 1)");
    }
    if (s.eps.empty()) throw ConfigError("noise.eps is empty");
    if (s.samples < 0 || s.samples == 1) throw ConfigError("noise.samples must be 0 or >= 2");
    c.noise = s;
  }
  if (j.contains("simulate")) {
    const json& s = j.at("simulate");
    reject_unknown(s, {"M", "trials", "allocation"}, "simulate");
    SimulateSettings sim;
    sim.M = get_or<std::int64_t>(s, "M", 4000);
    sim.trials = get_or<int>(s, "trials", 200);
    sim.allocation = get_or<std::string>(s, "allocation", "optimal");
    if (sim.allocation != "optimal" && sim.allocation != "uniform") {
      throw ConfigError("simulate.allocation must be 'optimal' or 'uniform'");
    }
    if (sim.M < 1) throw ConfigError("simulate.M must be positive");
    if (sim.trials < 30) throw ConfigError("simulate.trials must be >= 30");
    c.simulate = sim;
  }
  c.output = get_or<std::string>(j, "output", "latshot_out");
  c.seed = get_or<std::uint64_t>(j, "seed", 1);
  return c;
}

ExperimentConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
  }
  return parse_config(j);
}

std::size_t memory_estimate_bytes(int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  // Krylov basis (40 vectors) plus state, work and result vectors.
  return dim * sizeof(cplx) * 44;
}

namespace {

LatticeHamiltonian build(const ExperimentConfig& cfg, const ModelConfig& m) {
  const Lattice lat = build_lattice(cfg.lattice.nx, cfg.lattice.ny, cfg.lattice.layers,
                                    cfg.lattice.periodic);
  return build_model(lat, m);
}

ModelConfig model_at(const ExperimentConfig& cfg, std::optional<double> value) {
  ModelConfig m = cfg.model;
  if (cfg.scan && value) *m.coupling(cfg.scan->parameter) = *value;
  return m;
}

}  // namespace

void validate(const ExperimentConfig& cfg, bool large) {
  if (cfg.scan) {
    const auto names = ModelConfig::coupling_names(cfg.model.kind);
    if (std::find(names.begin(), names.end(), cfg.scan->parameter) == names.end()) {
      throw ConfigError(fmt::format("scan parameter '{}' is not a coupling of {}",
                                    cfg.scan->parameter, model_name(cfg.model.kind)));
    }
  }
  const int n = cfg.n_qubits();
  if (n > 16 && !large) {
    throw ConfigError(fmt::format(
        "{} qubits needs --large (about {:.1f} GB per ground-state solve)", n,
        memory_estimate_bytes(n) / 1e9));
  }
  if (n > 26) throw ConfigError(fmt::format("{} qubits exceeds the 26-qubit limit", n));
  if (cfg.partitionings.empty()) throw ConfigError("no partitionings requested");
  LatticeHamiltonian H;
  try {
    H = build(cfg, model_at(cfg, cfg.scan ? std::optional(cfg.scan->values[0]) : std::nullopt));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("lattice/model: ") + e.what());
  }
  for (const auto& spec : cfg.partitionings) {
    try {
      make_partition(H, spec);
    } catch (const std::exception& e) {
      throw ConfigError(fmt::format("partitioning {} on {}x{}: {}", spec.label(),
                                    cfg.lattice.ny, cfg.lattice.nx, e.what()));
    }
  }
  if (cfg.simulate) {
    for (const auto& spec : cfg.partitionings) {
      if (static_cast<std::int64_t>(make_partition(H, spec).size()) > cfg.simulate->M) {
        throw ConfigError("simulate.M is smaller than the number of parts of " + spec.label());
      }
    }
  }
}

namespace {

std::uint64_t point_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint64_t out[1];
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  out[0] = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return out[0];
}

// Particle number for models that conserve it; NaN otherwise.
double particle_number(const LatticeHamiltonian& H, const StateVector& psi) {
  const int n = H.n_qubits();
  if (H.config.kind == ModelKind::kHCBH) {
    // h sum n_i = (h/2) sum Z_i + const, so n_i = (1 + Z_i)/2.
    PauliSum N(n);
    N.add(PauliString(n, 0, 0), 0.5 * n);
    for (int q = 0; q < n; ++q) N.add(PauliString::single(n, q, 'Z'), 0.5);
    return expectation(N, psi);
  }
  if (is_fermionic(H.config.kind)) return expectation(number_operator(n), psi);
  return NAN;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const fs::path& path, const Table& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::string csv_text(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '"') c = ' ';
  }
  return s;
}

struct PointOutput {
  // Per requested partitioning, one row.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> noise_rows;
  bool failed = false;
  double seconds = 0;
  std::uint64_t seed = 0;
};

std::vector<std::string> main_header(const ExperimentConfig& cfg) {
  std::vector<std::string> h{cfg.scan ? cfg.scan->parameter : std::string("point"),
                             "partition", "status", "energy", "gap", "degenerate",
                             "n_particles", "parts", "g", "cost_pauli", "cost_partition",
                             "diverging", "bound", "cor_cut", "hypotheses", "solver"};
  if (cfg.simulate) {
    for (const char* c : {"sim_M", "sim_allocation", "sim_trials", "sim_estimate",
                          "sim_empirical_stderr", "sim_predicted_stderr", "sim_z"}) {
      h.emplace_back(c);
    }
  }
  return h;
}

const std::vector<std::string> kNoiseHeader{
    "param", "partition", "eps", "gbar", "lower", "upper", "regime", "mc_estimate",
    "mc_stderr"};

PointOutput evaluate_point(const ExperimentConfig& cfg, std::optional<double> value,
                           std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  PointOutput out;
  out.seed = seed;
  const std::string pval = value ? format_double(*value) : "0";
  const std::size_t width = main_header(cfg).size();
  auto fail_rows = [&](const std::string& msg) {
    out.failed = true;
    for (const auto& spec : cfg.partitionings) {
      std::vector<std::string> r(width, "");
      r[0] = pval;
      r[1] = spec.label();
      r[2] = "error: " + csv_text(msg);
      out.rows.push_back(std::move(r));
    }
  };
  try {
    const LatticeHamiltonian H = build(cfg, model_at(cfg, value));
    const PauliSum h = H.pauli();
    const EigenSolution gs = ground_state(h, 1);
    const StateVector& psi = gs.states[0];
    const double N = particle_number(H, psi);
    const Partitioning pauli = make_partition(H, PartitionSpec::pauli());
    const std::vector<MomentStats> pauli_stats = moment_stats(pauli, psi);
    const MomentStats whole = moment_stats(h, psi, "whole");
    const double d = std::ldexp(1.0, h.n_qubits());
    const double frob_h = frobenius_norm_sq_over_d(h);
    const EigenstateInfo eig{true, gs.degenerate};

    for (std::size_t k = 0; k < cfg.partitionings.size(); ++k) {
      const PartitionSpec& spec = cfg.partitionings[k];
      const Partitioning B = spec.kind == PartitionKind::kPauliBaseline
                                 ? pauli
                                 : make_partition(H, spec);
      const ImprovementReport rep = relative_complexity(pauli, B, psi, &H, eig);
      std::vector<std::string> r{pval, B.label, "ok", format_double(gs.energies[0]),
                                 format_double(gs.gap), gs.degenerate ? "1" : "0",
                                 format_double(N), std::to_string(B.size()),
                                 format_double(rep.g), format_double(rep.cost_numerator),
                                 format_double(rep.cost_denominator),
                                 rep.diverging ? "1" : "0", opt(rep.bound), opt(rep.cor_cut),
                                 hypotheses_name(rep.hypotheses), gs.method};
      if (cfg.simulate) {
        const auto& s = *cfg.simulate;
        const std::vector<double> vars = part_variances(B, psi);
        const Allocation alloc = s.allocation == "uniform"
                                     ? uniform_allocation(B.size(), s.M)
                                     : optimal_allocation(vars, s.M);
        const EstimatorRun run = simulate_estimator(B, psi, alloc, seed + k, s.trials);
        const double predicted = allocation_cost(vars, alloc.budgets) * s.M;
        const PredictionCheck c = compare_predictions(run, predicted, s.M);
        for (const std::string& v :
             {std::to_string(s.M), s.allocation, std::to_string(s.trials),
              format_double(run.estimate), format_double(run.empirical_stderr),
              format_double(std::sqrt(c.predicted_variance)), format_double(c.z)}) {
          r.push_back(v);
        }
      }
      out.rows.push_back(std::move(r));

      if (cfg.noise) {
        const std::vector<MomentStats> stats = moment_stats(B, psi);
        const std::vector<MomentStats> base = spec.kind == PartitionKind::kPauliBaseline
                                                  ? std::vector<MomentStats>{whole}
                                                  : stats;
        for (double eps : cfg.noise->eps) {
          // Pauli rows compare against measuring H in its eigenbasis; the
          // others compare the Pauli baseline against the partitioning.
          const double gbar = spec.kind == PartitionKind::kPauliBaseline
                                  ? ensemble_complexity(pauli_stats, base, eps, d,
                                                        cfg.noise->truncate)
                                  : ensemble_complexity(pauli_stats, stats, eps, d,
                                                        cfg.noise->truncate);
          std::string lower, upper, regime;
          if (spec.kind != PartitionKind::kPauliBaseline && gs.energies[0] != 0) {
            const Corollary3Bounds b =
                corollary3_bounds(pauli_stats, stats, gs.energies[0], frob_h, eps);
            lower = format_double(b.lower);
            upper = format_double(b.upper);
          }
          if (gs.energies[0] != 0) {
            regime = regime_name(
                regime_classify(eps, stats[0].variance, gs.energies[0], frob_h).regime);
          }
          std::string mc, mc_se;
          if (cfg.noise->samples > 0) {
            std::vector<PauliSum> ops = pauli.parts;
            const std::size_t np = ops.size();
            if (spec.kind == PartitionKind::kPauliBaseline) {
              ops.push_back(h);
            } else {
              ops.insert(ops.end(), B.parts.begin(), B.parts.end());
            }
            const auto est = mc_perturbed_variance(ops, psi, eps, cfg.noise->samples,
                                                   seed ^ std::hash<double>{}(eps));
            // First-order propagation, ignoring correlations between parts.
            double a = 0, b = 0, va = 0, vb = 0;
            for (std::size_t i = 0; i < est.size(); ++i) {
              const double s = std::sqrt(std::max(est[i].mean, 1e-300));
              const double ds = est[i].stderr_ / (2 * s);
              if (i < np) {
                a += s;
                va += ds * ds;
              } else {
                b += s;
                vb += ds * ds;
              }
            }
            const double G = (a / b) * (a / b);
            mc = format_double(G);
            mc_se = format_double(2 * G * std::sqrt(va / (a * a) + vb / (b * b)));
          }
          out.noise_rows.push_back({pval, B.label, format_double(eps), format_double(gbar),
                                    lower, upper, regime, mc, mc_se});
        }
      }
    }
  } catch (const std::exception& e) {
    out.rows.clear();
    out.noise_rows.clear();
    fail_rows(e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string timestamp() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void write_manifest(const ExperimentConfig& cfg, const std::string& command,
                    const json& extra) {
  json m;
  m["command"] = command;
  m["version"] = LATSHOT_VERSION;
  m["compiler"] = __VERSION__;
  m["created"] = timestamp();
  m["seed"] = cfg.seed;
  m["config"] = cfg.source;
  for (const auto& [k, v] : extra.items()) m[k] = v;
  std::ofstream(cfg.output / "manifest.json") << m.dump(2) << '\n';
}

}  // namespace

ScanSummary run_scan(const ExperimentConfig& cfg, const RunOptions& opts) {
  validate(cfg, opts.large);
  fs::create_directories(cfg.output);
  std::vector<std::optional<double>> grid;
  if (cfg.scan) {
    for (double v : cfg.scan->values) grid.emplace_back(v);
  } else {
    grid.emplace_back(std::nullopt);
  }
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<PointOutput> results(grid.size());
  omp_set_num_threads(std::max(1, opts.threads));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    results[i] = evaluate_point(cfg, grid[i], point_seed(cfg.seed, i));
    if (!opts.quiet) {
#pragma omp critical
      std::cerr << fmt::format("point {}/{} {}{:.2f} s\n", i + 1, grid.size(),
                               results[i].failed ? "FAILED " : "", results[i].seconds);
    }
  }

  ScanSummary sum;
  sum.points = static_cast<int>(grid.size());
  Table combined{main_header(cfg), {}};
  std::vector<Table> per(cfg.partitionings.size(), Table{main_header(cfg), {}});
  Table noise{kNoiseHeader, {}};
  noise.header[0] = cfg.scan ? cfg.scan->parameter : "point";
  json points = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const PointOutput& p = results[i];
    if (p.failed) ++sum.failed_points;
    for (std::size_t k = 0; k < p.rows.size(); ++k) {
      per[k].rows.push_back(p.rows[k]);
      combined.rows.push_back(p.rows[k]);
    }
    for (const auto& r : p.noise_rows) noise.rows.push_back(r);
    points.push_back({{"index", i}, {"value", grid[i] ? json(*grid[i]) : json(nullptr)},
                      {"seed", p.seed}, {"seconds", p.seconds}, {"failed", p.failed}});
  }
  for (std::size_t k = 0; k < cfg.partitionings.size(); ++k) {
    const fs::path f = cfg.output / (cfg.partitionings[k].label() + ".csv");
    write_csv(f, per[k]);
    sum.files.push_back(f);
  }
  write_csv(cfg.output / "scan.csv", combined);
  sum.files.push_back(cfg.output / "scan.csv");
  if (cfg.noise) {
    write_csv(cfg.output / "noise.csv", noise);
    sum.files.push_back(cfg.output / "noise.csv");
  }
  json files = json::array();
  for (const auto& f : sum.files) files.push_back(f.filename().string());
  write_manifest(cfg, "scan",
                 {{"points", points},
                  {"threads", opts.threads},
                  {"files", files},
                  {"failed_points", sum.failed_points},
                  {"seconds", std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count()}});
  sum.files.push_back(cfg.output / "manifest.json");
  return sum;
}

std::vector<fs::path> export_hamiltonian(const ExperimentConfig& cfg) {
  validate(cfg, true);
  fs::create_directories(cfg.output);
  const LatticeHamiltonian H = build(cfg, model_at(cfg, std::nullopt));
  std::vector<fs::path> files;
  const fs::path hp = cfg.output / "hamiltonian.txt";
  std::ofstream(hp) << H.pauli().to_text();
  files.push_back(hp);
  for (const auto& spec : cfg.partitionings) {
    const Partitioning B = make_partition(H, spec);
    const fs::path p = cfg.output / (B.label + ".parts.txt");
    std::ofstream out(p);
    for (std::size_t b = 0; b < B.size(); ++b) {
      out << "# part " << b << '\n' << B.parts[b].to_text();
    }
    files.push_back(p);
  }
  return files;
}

ScanSummary run_simulation(const ExperimentConfig& cfg, const RunOptions& opts) {
  validate(cfg, opts.large);
  if (!cfg.simulate) throw ConfigError("config has no 'simulate' section");
  fs::create_directories(cfg.output);
  omp_set_num_threads(std::max(1, opts.threads));
  const auto& s = *cfg.simulate;
  const LatticeHamiltonian H = build(cfg, model_at(cfg, std::nullopt));
  const EigenSolution gs = ground_state(H.pauli(), 1);
  const StateVector& psi = gs.states[0];
  Table t{{"partition", "M", "allocation", "trials", "estimate", "exact",
           "empirical_stderr", "predicted_stderr", "z"},
          {}};
  for (std::size_t k = 0; k < cfg.partitionings.size(); ++k) {
    const Partitioning B = make_partition(H, cfg.partitionings[k]);
    const std::vector<double> vars = part_variances(B, psi);
    const Allocation alloc = s.allocation == "uniform" ? uniform_allocation(B.size(), s.M)
                                                       : optimal_allocation(vars, s.M);
    const EstimatorRun run =
        simulate_estimator(B, psi, alloc, point_seed(cfg.seed, k), s.trials);
    const PredictionCheck c =
        compare_predictions(run, allocation_cost(vars, alloc.budgets) * s.M, s.M);
    t.rows.push_back({B.label, std::to_string(s.M), s.allocation, std::to_string(s.trials),
                      format_double(run.estimate), format_double(gs.energies[0]),
                      format_double(run.empirical_stderr),
                      format_double(std::sqrt(c.predicted_variance)), format_double(c.z)});
    if (!opts.quiet) {
      std::cerr << fmt::format("{}: stderr {:.4g} predicted {:.4g} z {:+.2f}\n", B.label,
                               run.empirical_stderr, std::sqrt(c.predicted_variance), c.z);
    }
  }
  ScanSummary sum;
  sum.points = 1;
  write_csv(cfg.output / "simulation.csv", t);
  sum.files.push_back(cfg.output / "simulation.csv");
  write_manifest(cfg, "simulate", {{"files", {"simulation.csv"}}});
  return sum;
}

}  // namespace latshot::tools
