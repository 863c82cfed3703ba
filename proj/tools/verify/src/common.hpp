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

#ifndef LATSHOT_VERIFY_COMMON_HPP_
#define LATSHOT_VERIFY_COMMON_HPP_

#include <chrono>
#include <string>

#include <fmt/format.h>

#include "latshot/metrics.hpp"
#include "latshot/models.hpp"
#include "latshot/partition.hpp"
#include "latshot/perturbed.hpp"
#include "latshot/spectral.hpp"
#include "latshot/verify.hpp"

namespace latshot::verify::detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void say(const Options& o, const std::string& s) {
  if (o.log) o.log(s);
}

inline void add(CheckResult& r, std::string name, bool ok, std::string detail) {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

struct Instance {
  std::string name;
  LatticeHamiltonian H;
  PauliSum pauli;
  EigenSolution ground;
};

Instance solve(std::string name, const LatticeHamiltonian& H);

ModelConfig tfim_config(double J, double h);
ModelConfig tfxym_config(double eta, double h);
ModelConfig bnnni_config(double J, double kappa, double h);
ModelConfig hcbh_config(double J, double h);

// (J, h) = (1, 1) TFIM, eta = 0.5 TFXYM, kappa = 0.3 BNNNI, J = 0.45 HCBH.
std::vector<ModelConfig> reference_models();

}  // namespace latshot::verify::detail

#endif  // LATSHOT_VERIFY_COMMON_HPP_
