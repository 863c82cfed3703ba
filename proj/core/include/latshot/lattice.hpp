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

#ifndef LATSHOT_LATTICE_HPP_
#define LATSHOT_LATTICE_HPP_

#include <vector>

namespace latshot {

enum class Direction { kX, kY };

struct Edge {
  int a = 0;  // planar site indices
  int b = 0;
  Direction dir = Direction::kX;
};

// Rectangular grid of nx * ny sites, optionally with two layers (spin up /
// spin down for the spinful Hubbard model). Edges connect planar sites;
// layers share the planar geometry.
class Lattice {
 public:
  Lattice() = default;

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int layers() const { return layers_; }
  bool periodic() const { return periodic_; }
  int n_sites() const { return nx_ * ny_; }
  int n_qubits() const { return nx_ * ny_ * layers_; }

  // Row-major: layer * nx * ny + iy * nx + ix.
  int site_index(int ix, int iy, int layer = 0) const;
  int planar_index(int ix, int iy) const { return iy * nx_ + ix; }
  int ix(int planar_site) const { return planar_site % nx_; }
  int iy(int planar_site) const { return planar_site / nx_; }

  const std::vector<Edge>& nn_edges() const { return nn_; }
  const std::vector<Edge>& nnn_axial_edges() const { return nnn_; }

 private:
  friend Lattice build_lattice(int, int, int, bool);
  friend Lattice build_chain(int, bool);

  void make_edges();

  int nx_ = 0;
  int ny_ = 0;
  int layers_ = 1;
  bool periodic_ = true;
  std::vector<Edge> nn_;
  std::vector<Edge> nnn_;
};

// nx, ny >= 2; layers in {1, 2}. With periodic boundaries an extent-2
// direction would produce the same bond twice; such duplicates are merged.
// Axial next-nearest-neighbour bonds (i, i + 2) are listed once per starting
// site and are not merged, so an extent-4 periodic direction contributes each
// pair twice, matching a sum over sites of the forward NNN bond.
Lattice build_lattice(int nx, int ny, int layers = 1, bool periodic = true);

// Ring (or open chain) of n sites, represented as an n x 1 lattice without
// y bonds.
Lattice build_chain(int n, bool periodic = true);

}  // namespace latshot

#endif  // LATSHOT_LATTICE_HPP_
