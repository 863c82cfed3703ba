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

#ifndef LATSHOT_VERIFY_HPP_
#define LATSHOT_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace latshot::verify {

enum class Size { kSmall, kDefault };
Size parse_size(const std::string& s);

struct Options {
  Size size = Size::kDefault;
  std::uint64_t seed = 20261018;
  // Progress lines; ignored when empty.
  std::function<void(const std::string&)> log;
};

struct SubCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckResult {
  int id = 0;
  std::string title;
  std::vector<SubCheck> checks;
  nlohmann::json data = nlohmann::json::object();
  double seconds = 0;
  double budget_seconds = 0;

  bool passed() const;
  // "[PASS] 3 Lemma-5 limits (12.3 s): ..." style summary line.
  std::string summary() const;
  nlohmann::json to_json() const;
};

using Criterion = CheckResult (*)(const Options&);

CheckResult eigenstate_identities(const Options& opts);     // 1
CheckResult geometric_bounds(const Options& opts);          // 2
CheckResult tfim_limits(const Options& opts);               // 3
CheckResult tfxym_divergence(const Options& opts);          // 4
CheckResult perturbed_monte_carlo(const Options& opts);     // 5
CheckResult noisy_bounds(const Options& opts);              // 6
CheckResult epsilon_thresholds(const Options& opts);        // 7
CheckResult shot_calibration(const Options& opts);          // 8
CheckResult oracle_equivalence(const Options& opts);        // 9
CheckResult hubbard_structure(const Options& opts);         // 10

struct Entry {
  int id;
  Criterion run;
};
const std::vector<Entry>& criteria();

// Runs the selected criteria (all when empty) in id order.
std::vector<CheckResult> run(const Options& opts, const std::vector<int>& ids = {});

}  // namespace latshot::verify

#endif  // LATSHOT_VERIFY_HPP_
