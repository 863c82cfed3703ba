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

// latshot: sampling-cost scans, shot simulation and verification for
// partitioned lattice Hamiltonians.
//
// Exit codes: 0 ok, 1 a verification check failed, 2 configuration error.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "experiment.hpp"
#include "latshot/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kConfigError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latshot: measurement cost of geometric Hamiltonian partitionings"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  bool large = false;
  bool quiet = false;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--large", large, "Allow systems above 16 qubits (prints memory estimate)");
  app.add_flag("-q,--quiet", quiet, "Suppress progress output");

  std::string config_path;
  auto* scan = app.add_subcommand("scan", "Run a parameter scan and write CSV files");
  scan->add_option("config", config_path, "Experiment config (JSON)")->required();
  auto* exp = app.add_subcommand("export-hamiltonian",
                                 "Write the Hamiltonian and its partitionings as Pauli text");
  exp->add_option("config", config_path, "Experiment config (JSON)")->required();
  auto* sim = app.add_subcommand("simulate", "Simulate the shot-based energy estimator");
  sim->add_option("config", config_path, "Experiment config (JSON)")->required();

  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  std::string size = "default";
  std::string json_path;
  std::vector<int> only;
  ver->add_option("--size", size, "small or default")
      ->check(CLI::IsMember({"small", "default"}));
  ver->add_option("--json", json_path, "Write a JSON report");
  ver->add_option("--only", only, "Run only these criteria (1-10)")
      ->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }
  omp_set_num_threads(threads);
  const latshot::tools::RunOptions run{threads, large, quiet};

  try {
    if (*ver) {
      latshot::verify::Options opts;
      opts.size = latshot::verify::parse_size(size);
      if (!quiet) opts.log = [](const std::string& s) { std::cerr << s << '\n'; };
      const auto results = latshot::verify::run(opts, only);
      nlohmann::json report = nlohmann::json::array();
      bool ok = true;
      for (const auto& r : results) {
        std::cout << r.summary() << '\n';
        report.push_back(r.to_json());
        ok = ok && r.passed();
      }
      if (!json_path.empty()) std::ofstream(json_path) << report.dump(2) << '\n';
      return ok ? kOk : kCheckFailed;
    }

    const auto cfg = latshot::tools::load_config(config_path);
    const int n = cfg.n_qubits();
    if (large && n > 16) {
      std::cerr << fmt::format("{} qubits: about {:.1f} GB per ground-state solve\n", n,
                               latshot::tools::memory_estimate_bytes(n) / 1e9);
    }
    if (*scan) {
      const auto s = latshot::tools::run_scan(cfg, run);
      for (const auto& f : s.files) std::cout << f.string() << '\n';
      if (s.failed_points > 0) {
        std::cerr << fmt::format("{} of {} points failed (see status column)\n",
                                 s.failed_points, s.points);
      }
    } else if (*exp) {
      for (const auto& f : latshot::tools::export_hamiltonian(cfg)) std::cout << f.string() << '\n';
    } else if (*sim) {
      for (const auto& f : latshot::tools::run_simulation(cfg, run).files) {
        std::cout << f.string() << '\n';
      }
    }
    return kOk;
  } catch (const latshot::tools::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}
