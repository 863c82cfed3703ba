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

#include "common.hpp"

#include <algorithm>
#include <stdexcept>

namespace latshot::verify {

Size parse_size(const std::string& s) {
  if (s == "small") return Size::kSmall;
  if (s == "default") return Size::kDefault;
  throw std::invalid_argument("unknown size '" + s + "' (small, default)");
}

bool CheckResult::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string CheckResult::summary() const {
  int failed = 0;
  std::string first_failure;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (failed++ == 0) first_failure = c.name + ": " + c.detail;
  }
  std::string line = fmt::format("[{}] {:2d} {} ({:.1f} s, {}/{} checks)",
                                 passed() ? "PASS" : "FAIL", id, title, seconds,
                                 checks.size() - failed, checks.size());
  if (failed > 0) line += " first failure: " + first_failure;
  if (budget_seconds > 0 && seconds > budget_seconds) {
    line += fmt::format(" [over {:.0f} s budget]", budget_seconds);
  }
  return line;
}

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["title"] = title;
  j["passed"] = passed();
  j["seconds"] = seconds;
  j["budget_seconds"] = budget_seconds;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["data"] = data;
  return j;
}

const std::vector<Entry>& criteria() {
  static const std::vector<Entry> all{
      {1, eigenstate_identities}, {2, geometric_bounds},
      {3, tfim_limits},           {4, tfxym_divergence},
      {5, perturbed_monte_carlo}, {6, noisy_bounds},
      {7, epsilon_thresholds},    {8, shot_calibration},
      {9, oracle_equivalence},    {10, hubbard_structure},
  };
  return all;
}

std::vector<CheckResult> run(const Options& opts, const std::vector<int>& ids) {
  std::vector<CheckResult> out;
  for (const auto& e : criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
    detail::say(opts, fmt::format("criterion {} ...", e.id));
    out.push_back(e.run(opts));
    detail::say(opts, out.back().summary());
  }
  return out;
}

namespace detail {

Instance solve(std::string name, const LatticeHamiltonian& H) {
  Instance in{std::move(name), H, H.pauli(), {}};
  in.ground = ground_state(in.pauli, 1);
  return in;
}

ModelConfig tfim_config(double J, double h) {
  ModelConfig c;
  c.kind = ModelKind::kTFIM;
  c.J = J;
  c.h = h;
  return c;
}

ModelConfig tfxym_config(double eta, double h) {
  ModelConfig c;
  c.kind = ModelKind::kTFXYM;
  c.eta = eta;
  c.h = h;
  return c;
}

ModelConfig bnnni_config(double J, double kappa, double h) {
  ModelConfig c;
  c.kind = ModelKind::kBNNNI;
  c.J = J;
  c.kappa = kappa;
  c.h = h;
  return c;
}

ModelConfig hcbh_config(double J, double h) {
  ModelConfig c;
  c.kind = ModelKind::kHCBH;
  c.J = J;
  c.h = h;
  return c;
}

std::vector<ModelConfig> reference_models() {
  return {tfxym_config(0.5, 1.0), tfim_config(1.0, 1.0),
          bnnni_config(1.0, 0.3, 1.0), hcbh_config(0.45, 1.0)};
}

}  // namespace detail
}  // namespace latshot::verify
