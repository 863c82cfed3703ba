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

#ifndef LATSHOT_SHOT_SIM_INL_HPP_
#define LATSHOT_SHOT_SIM_INL_HPP_

#include <algorithm>
#include <random>

namespace latshot {

template <class Rng>
double sample_outcome(const OutcomeDistribution& d, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, d.cdf.back());
  const double r = u(rng);
  auto it = std::upper_bound(d.cdf.begin(), d.cdf.end(), r);
  if (it == d.cdf.end()) --it;
  return d.values[static_cast<std::size_t>(it - d.cdf.begin())];
}

}  // namespace latshot

#endif  // LATSHOT_SHOT_SIM_INL_HPP_
