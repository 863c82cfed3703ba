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

#ifndef LATSHOT_MODELS_HPP_
#define LATSHOT_MODELS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latshot/lattice.hpp"
#include "latshot/pauli.hpp"

namespace latshot {

enum class ModelKind { kTFXYM, kTFIM, kBNNNI, kHCBH, kSpinlessHubbard, kHubbard };

std::string model_name(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);
bool is_fermionic(ModelKind kind);

struct ModelConfig {
  ModelKind kind = ModelKind::kTFIM;
  std::optional<double> eta, h, J, kappa, t, U, mu;

  // Throws if a coupling outside the model's set is present or a required
  // one is missing.
  void validate() const;
  // Names of the couplings the model uses, in canonical order.
  static std::vector<std::string> coupling_names(ModelKind kind);
  std::optional<double>* coupling(std::string_view name);
  std::optional<double> coupling(std::string_view name) const;
  std::string describe() const;
};

enum class TermRole {
  kField,       // one-site term
  kBond,        // nearest-neighbour spin coupling
  kNnnBond,     // axial next-nearest-neighbour coupling
  kHopping,     // fermionic hopping, JW image
  kDiagonal,    // fermionic density / interaction / chemical potential term
};

// One local piece of a lattice Hamiltonian together with the planar sites it
// acts on. For fermionic models the Pauli support of a hopping term contains
// its Jordan-Wigner string and may be larger than `sites`; geometric
// partitions are defined on `sites`.
struct LocalTerm {
  std::vector<int> sites;  // sorted planar site indices
  PauliSum op;
  TermRole role = TermRole::kField;
  Direction dir = Direction::kX;
  int layer = 0;  // spin layer for spinful hopping; 0 otherwise
};

struct LatticeHamiltonian {
  Lattice lattice;
  ModelConfig config;
  std::vector<LocalTerm> terms;

  int n_qubits() const { return lattice.n_qubits(); }
  PauliSum pauli() const;
};

LatticeHamiltonian build_tfxym(const Lattice& lat, double eta, double h);
LatticeHamiltonian build_tfim(const Lattice& lat, double J, double h);
LatticeHamiltonian build_bnnni(const Lattice& lat, double J, double kappa,
                               double h);
LatticeHamiltonian build_hcbh(const Lattice& lat, double J, double h);
LatticeHamiltonian build_spinless_hubbard(const Lattice& lat, double t,
                                          double U, double mu);
LatticeHamiltonian build_hubbard(const Lattice& lat, double t, double U,
                                 double mu);
LatticeHamiltonian build_model(const Lattice& lat, const ModelConfig& cfg);

// Fermionic monomials accepted by jordan_wigner, over modes 0..n_modes-1.
struct FermionTerm {
  enum class Kind {
    kHopping,      // c^dag_p c_q + c^dag_q c_p, p != q
    kNumber,       // n_p
    kDensityPair,  // n_p n_q, p != q
  };
  Kind kind = Kind::kNumber;
  int p = 0;
  int q = 0;
};

PauliSum jordan_wigner(const FermionTerm& term, int n_modes);

// JW image of the total particle number sum_p n_p.
PauliSum number_operator(int n_modes);
// sum_i Z_i.
PauliSum total_z(int n_qubits);

}  // namespace latshot

#endif  // LATSHOT_MODELS_HPP_
