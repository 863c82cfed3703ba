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

#ifndef LATSHOT_TOOLS_EXPERIMENT_HPP_
#define LATSHOT_TOOLS_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "latshot/models.hpp"
#include "latshot/partition.hpp"

namespace latshot::tools {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LatticeConfig {
  int nx = 4;
  int ny = 3;
  int layers = 1;
  bool periodic = true;
};

struct ScanConfig {
  std::string parameter;
  std::vector<double> values;
};

struct NoiseSettings {
  std::vector<double> eps;
  int samples = 0;  // Monte Carlo draws per eps; 0 skips the estimate
  bool truncate = false;
};

struct SimulateSettings {
  std::int64_t M = 4000;
  int trials = 200;
  std::string allocation = "optimal";  // or "uniform"
};

struct ExperimentConfig {
  ModelConfig model;
  LatticeConfig lattice;
  std::vector<PartitionSpec> partitionings;
  std::optional<ScanConfig> scan;
  std::optional<NoiseSettings> noise;
  std::optional<SimulateSettings> simulate;
  std::filesystem::path output = "latshot_out";
  std::uint64_t seed = 1;
  nlohmann::json source;

  int n_qubits() const;
};

// Schema:
//   model:    {"kind": "tfim", "J": 1, "h": 1}
//   lattice:  {"nx": 4, "ny": 3, "layers": 1, "periodic": true}
//   partitionings: ["pauli", "geo1d_L1", "geo1d_L2"]
//   scan:     {"parameter": "J", "values": [...]} or
//             {"parameter": "J", "start": a, "stop": b, "points": n,
//              "spacing": "linear" | "log"}
//   noise:    {"eps": [...], "samples": 0, "truncate": false}
//   simulate: {"M": 4000, "trials": 200, "allocation": "optimal"}
//   output:   "dir", seed: 1
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

// Checks everything that can be checked before heavy work: couplings, the
// scan parameter, lattice shape, and that every partitioning can be built.
// Systems above 16 qubits need `large`.
void validate(const ExperimentConfig& cfg, bool large);

// Rough peak memory of one ground-state solve.
std::size_t memory_estimate_bytes(int n_qubits);

struct RunOptions {
  int threads = 1;
  bool large = false;
  bool quiet = false;
};

struct ScanSummary {
  int points = 0;
  int failed_points = 0;
  std::vector<std::filesystem::path> files;
};

ScanSummary run_scan(const ExperimentConfig& cfg, const RunOptions& opts);
// Writes <output>/hamiltonian.txt and one <label>.parts.txt per partitioning.
std::vector<std::filesystem::path> export_hamiltonian(const ExperimentConfig& cfg);
// Shot simulation at the base model point; writes <output>/simulation.csv.
ScanSummary run_simulation(const ExperimentConfig& cfg, const RunOptions& opts);

// Shortest round-trip decimal; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

}  // namespace latshot::tools

#endif  // LATSHOT_TOOLS_EXPERIMENT_HPP_
