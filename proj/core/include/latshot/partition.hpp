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

#ifndef LATSHOT_PARTITION_HPP_
#define LATSHOT_PARTITION_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latshot/lattice.hpp"
#include "latshot/models.hpp"
#include "latshot/pauli.hpp"

namespace latshot {

enum class PartitionKind { kPauliBaseline, kGeo1D, kGeo2D, kTwoLocal, kWhole };

struct PartitionSpec {
  PartitionKind kind = PartitionKind::kPauliBaseline;
  int L = 0;   // Geo1D strip width
  int Lx = 0;  // Geo2D patch size
  int Ly = 0;

  static PartitionSpec pauli() { return {PartitionKind::kPauliBaseline}; }
  static PartitionSpec geo1d(int L) { return {PartitionKind::kGeo1D, L}; }
  static PartitionSpec geo2d(int lx, int ly) {
    return {PartitionKind::kGeo2D, 0, lx, ly};
  }
  static PartitionSpec two_local() { return {PartitionKind::kTwoLocal}; }
  static PartitionSpec whole() { return {PartitionKind::kWhole}; }

  bool geometric() const {
    return kind == PartitionKind::kGeo1D || kind == PartitionKind::kGeo2D ||
           kind == PartitionKind::kTwoLocal;
  }
  // "pauli", "geo1d_L2", "geo2d_2x2", "two_local", "whole".
  std::string label() const;
  static PartitionSpec parse(std::string_view label);

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

// Raised when a geometric partitioning cannot be built for a lattice/model.
class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Assignment of every planar site to a patch id.
using Covering = std::vector<int>;

struct Partitioning {
  PartitionSpec spec;
  std::string label;
  std::vector<PauliSum> parts;
  // Geometric kinds: per part, the disjoint patches as sorted planar sites.
  std::vector<std::vector<std::vector<int>>> patches;
  // Geometric kinds: per part, the (scaled) local terms it contains.
  std::vector<std::vector<LocalTerm>> part_terms;
  int layers = 1;
  bool fermionic = false;

  std::size_t size() const { return parts.size(); }
  PauliSum total() const;
  // Patches of part b expanded to qubit indices over all layers.
  std::vector<std::vector<int>> qubit_patches(std::size_t b,
                                              const Lattice& lat) const;
};

struct CutPair {
  PauliSum h_cut;        // terms only in the second part
  PauliSum h_cut_prime;  // terms only in the first part
};

// With a hint, the model's natural grouping: TFIM/BNNNI {ZZ},{X};
// TFXYM/HCBH {XX},{YY},{Z}. Without one, greedy first-fit by descending
// |coefficient| under full commutation.
Partitioning pauli_baseline(const PauliSum& H,
                            std::optional<ModelKind> hint = std::nullopt);
// Uses the model kind as hint. Fermionic models: hopping bonds are colored
// per direction into groups of pairwise disjoint, commuting terms, and all
// diagonal terms form one more group.
Partitioning pauli_baseline(const LatticeHamiltonian& H);

Partitioning whole_partition(const PauliSum& H);

// The site coverings that define the parts of a geometric kind. `range` is
// the largest interaction extent along a lattice axis (1 nearest neighbour,
// 2 axial next-nearest neighbour) and sets the number of shifted strips.
std::vector<Covering> geometric_coverings(const Lattice& lat,
                                          const PartitionSpec& spec,
                                          int range = 1);

Partitioning geometric_partition(const LatticeHamiltonian& H,
                                 const PartitionSpec& spec);
CutPair make_cut_pair(const LatticeHamiltonian& H, const PartitionSpec& spec);

Partitioning make_partition(const LatticeHamiltonian& H,
                            const PartitionSpec& spec);

struct PartitionReport {
  double residual = 0;
  std::vector<std::string> commutation_violations;
  std::vector<std::string> patch_violations;

  bool ok(double tol = 1e-12) const {
    return residual <= tol && commutation_violations.empty() &&
           patch_violations.empty();
  }
};

PartitionReport validate_partition(const Partitioning& p, const PauliSum& H);

}  // namespace latshot

#endif  // LATSHOT_PARTITION_HPP_
