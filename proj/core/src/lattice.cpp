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

#include "latshot/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace latshot {

int Lattice::site_index(int ix, int iy, int layer) const {
  if (ix < 0 || ix >= nx_ || iy < 0 || iy >= ny_ || layer < 0 ||
      layer >= layers_) {
    throw std::out_of_range("lattice coordinate out of range");
  }
  return layer * nx_ * ny_ + iy * nx_ + ix;
}

void Lattice::make_edges() {
  nn_.clear();
  nnn_.clear();
  std::set<std::pair<int, int>> seen;
  auto add_nn = [&](int a, int b, Direction d) {
    if (a == b) return;
    const auto key = std::minmax(a, b);
    if (!seen.insert(key).second) return;
    nn_.push_back({a, b, d});
  };
  for (int iy = 0; iy < ny_; ++iy) {
    for (int ix = 0; ix < nx_; ++ix) {
      const int s = planar_index(ix, iy);
      if (nx_ > 1 && (periodic_ || ix + 1 < nx_)) {
        add_nn(s, planar_index((ix + 1) % nx_, iy), Direction::kX);
      }
      if (ny_ > 1 && (periodic_ || iy + 1 < ny_)) {
        add_nn(s, planar_index(ix, (iy + 1) % ny_), Direction::kY);
      }
    }
  }
  for (int iy = 0; iy < ny_; ++iy) {
    for (int ix = 0; ix < nx_; ++ix) {
      const int s = planar_index(ix, iy);
      if (nx_ >= 3 && (periodic_ || ix + 2 < nx_)) {
        nnn_.push_back({s, planar_index((ix + 2) % nx_, iy), Direction::kX});
      }
      if (ny_ >= 3 && (periodic_ || iy + 2 < ny_)) {
        nnn_.push_back({s, planar_index(ix, (iy + 2) % ny_), Direction::kY});
      }
    }
  }
}

Lattice build_lattice(int nx, int ny, int layers, bool periodic) {
  if (nx < 2 || ny < 2) {
    throw std::invalid_argument("lattice extents must be >= 2, got " +
                                std::to_string(nx) + "x" + std::to_string(ny));
  }
  if (layers != 1 && layers != 2) {
    throw std::invalid_argument("layers must be 1 or 2");
  }
  if (nx * ny * layers > 64) {
    throw std::invalid_argument("lattice exceeds 64 qubits");
  }
  Lattice lat;
  lat.nx_ = nx;
  lat.ny_ = ny;
  lat.layers_ = layers;
  lat.periodic_ = periodic;
  lat.make_edges();
  return lat;
}

Lattice build_chain(int n, bool periodic) {
  if (n < 2 || n > 64) throw std::invalid_argument("chain length out of range");
  Lattice lat;
  lat.nx_ = n;
  lat.ny_ = 1;
  lat.layers_ = 1;
  lat.periodic_ = periodic;
  lat.make_edges();
  return lat;
}

}  // namespace latshot
