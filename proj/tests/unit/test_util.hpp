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


#ifndef LATSHOT_TESTS_TEST_UTIL_HPP_
#define LATSHOT_TESTS_TEST_UTIL_HPP_

#include <random>
#include <string>

#include "latshot/pauli.hpp"
#include "latshot/spectral.hpp"

namespace latshot::testing {

inline std::string random_pauli_text(int n, std::mt19937_64& rng) {
  static constexpr char kOps[] = {'I', 'X', 'Y', 'Z'};
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s(static_cast<std::size_t>(n), 'I');
  for (auto& c : s) c = kOps[pick(rng)];
  return s;
}

inline PauliSum random_sum(int n, int terms, std::mt19937_64& rng,
                           bool with_identity = true) {
  std::normal_distribution<double> coef;
  PauliSum s(n);
  for (int k = 0; k < terms; ++k) s.add(random_pauli_text(n, rng), coef(rng));
  if (with_identity) s.add(std::string(static_cast<std::size_t>(n), 'I'), coef(rng));
  return s;
}

inline StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  StateVector psi(n);
  double nrm = 0;
  for (auto& a : psi.amp) {
    a = {g(rng), g(rng)};
    nrm += std::norm(a);
  }
  for (auto& a : psi.amp) a /= std::sqrt(nrm);
  return psi;
}

}  // namespace latshot::testing

#endif  // LATSHOT_TESTS_TEST_UTIL_HPP_
