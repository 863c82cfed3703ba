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

#include "latshot/models.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace latshot {
namespace {

struct KindName {
  ModelKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {ModelKind::kTFXYM, "tfxym"},
    {ModelKind::kTFIM, "tfim"},
    {ModelKind::kBNNNI, "bnnni"},
    {ModelKind::kHCBH, "hcbh"},
    {ModelKind::kSpinlessHubbard, "spinless_hubbard"},
    {ModelKind::kHubbard, "hubbard"},
};

void require_single_layer(const Lattice& lat, const char* model) {
  if (lat.layers() != 1) {
    throw std::invalid_argument(std::string(model) +
                                " needs a single-layer lattice");
  }
}

PauliString two_site(int n, int a, char pa, int b, char pb) {
  std::string s(n, 'I');
  s[a] = pa;
  s[b] = pb;
  return PauliString::parse(s);
}

LocalTerm bond(const Lattice& lat, const Edge& e, TermRole role) {
  LocalTerm t;
  t.sites = {std::min(e.a, e.b), std::max(e.a, e.b)};
  t.op = PauliSum(lat.n_qubits());
  t.role = role;
  t.dir = e.dir;
  return t;
}

LocalTerm field(const Lattice& lat, int site, char op, double c) {
  LocalTerm t;
  t.sites = {site};
  t.op = PauliSum(lat.n_qubits());
  t.op.add(PauliString::single(lat.n_qubits(), site, op), c);
  t.role = TermRole::kField;
  return t;
}

void push_nonempty(std::vector<LocalTerm>& terms, LocalTerm t) {
  if (!t.op.empty()) terms.push_back(std::move(t));
}

}  // namespace

std::string model_name(ModelKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const auto& kn : kKindNames) {
    if (lower == kn.name) return kn.kind;
  }
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

bool is_fermionic(ModelKind kind) {
  return kind == ModelKind::kSpinlessHubbard || kind == ModelKind::kHubbard;
}

std::vector<std::string> ModelConfig::coupling_names(ModelKind kind) {
  switch (kind) {
    case ModelKind::kTFXYM: return {"eta", "h"};
    case ModelKind::kTFIM: return {"J", "h"};
    case ModelKind::kBNNNI: return {"J", "kappa", "h"};
    case ModelKind::kHCBH: return {"J", "h"};
    case ModelKind::kSpinlessHubbard:
    case ModelKind::kHubbard: return {"t", "U", "mu"};
  }
  return {};
}

std::optional<double>* ModelConfig::coupling(std::string_view name) {
  if (name == "eta") return &eta;
  if (name == "h") return &h;
  if (name == "J") return &J;
  if (name == "kappa") return &kappa;
  if (name == "t") return &t;
  if (name == "U") return &U;
  if (name == "mu") return &mu;
  return nullptr;
}

std::optional<double> ModelConfig::coupling(std::string_view name) const {
  return *const_cast<ModelConfig*>(this)->coupling(name);
}

void ModelConfig::validate() const {
  const auto wanted = coupling_names(kind);
  for (const char* name : {"eta", "h", "J", "kappa", "t", "U", "mu"}) {
    const bool used =
        std::find(wanted.begin(), wanted.end(), name) != wanted.end();
    const bool set = coupling(name).has_value();
    if (set && !used) {
      throw std::invalid_argument("coupling '" + std::string(name) +
                                  "' does not apply to " + model_name(kind));
    }
    if (!set && used) {
      throw std::invalid_argument(model_name(kind) + " requires coupling '" +
                                  name + "'");
    }
  }
}

std::string ModelConfig::describe() const {
  std::string out = model_name(kind) + "(";
  bool first = true;
  char buf[64];
  for (const auto& name : coupling_names(kind)) {
    const auto v = coupling(name);
    if (!v) continue;
    std::snprintf(buf, sizeof(buf), "%s=%.6g", name.c_str(), *v);
    out += (first ? "" : ",");
    out += buf;
    first = false;
  }
  return out + ")";
}

PauliSum LatticeHamiltonian::pauli() const {
  PauliSum out(n_qubits());
  for (const auto& t : terms) out += t.op;
  return out;
}

LatticeHamiltonian build_tfxym(const Lattice& lat, double eta, double h) {
  require_single_layer(lat, "TFXYM");
  LatticeHamiltonian H{lat, {}, {}};
  H.config.kind = ModelKind::kTFXYM;
  H.config.eta = eta;
  H.config.h = h;
  const int n = lat.n_qubits();
  for (const Edge& e : lat.nn_edges()) {
    LocalTerm t = bond(lat, e, TermRole::kBond);
    t.op.add(two_site(n, e.a, 'X', e.b, 'X'), -0.5 * (1 + eta));
    t.op.add(two_site(n, e.a, 'Y', e.b, 'Y'), -0.5 * (1 - eta));
    push_nonempty(H.terms, std::move(t));
  }
  for (int i = 0; i < lat.n_sites(); ++i) {
    push_nonempty(H.terms, field(lat, i, 'Z', -h));
  }
  return H;
}

LatticeHamiltonian build_tfim(const Lattice& lat, double J, double h) {
  require_single_layer(lat, "TFIM");
  LatticeHamiltonian H{lat, {}, {}};
  H.config.kind = ModelKind::kTFIM;
  H.config.J = J;
  H.config.h = h;
  const int n = lat.n_qubits();
  for (const Edge& e : lat.nn_edges()) {
    LocalTerm t = bond(lat, e, TermRole::kBond);
    t.op.add(two_site(n, e.a, 'Z', e.b, 'Z'), -J);
    push_nonempty(H.terms, std::move(t));
  }
  for (int i = 0; i < lat.n_sites(); ++i) {
    push_nonempty(H.terms, field(lat, i, 'X', -h));
  }
  return H;
}

LatticeHamiltonian build_bnnni(const Lattice& lat, double J, double kappa,
                               double h) {
  require_single_layer(lat, "BNNNI");
  if (lat.nx() < 3 || lat.ny() < 3) {
    throw std::invalid_argument(
        "BNNNI needs nx, ny >= 3 for axial next-nearest-neighbour bonds");
  }
  LatticeHamiltonian H = build_tfim(lat, J, h);
  H.config = {};
  H.config.kind = ModelKind::kBNNNI;
  H.config.J = J;
  H.config.kappa = kappa;
  H.config.h = h;
  const int n = lat.n_qubits();
  for (const Edge& e : lat.nnn_axial_edges()) {
    LocalTerm t = bond(lat, e, TermRole::kNnnBond);
    t.op.add(two_site(n, e.a, 'Z', e.b, 'Z'), J * kappa);
    push_nonempty(H.terms, std::move(t));
  }
  return H;
}

LatticeHamiltonian build_hcbh(const Lattice& lat, double J, double h) {
  require_single_layer(lat, "HCBH");
  LatticeHamiltonian H{lat, {}, {}};
  H.config.kind = ModelKind::kHCBH;
  H.config.J = J;
  H.config.h = h;
  const int n = lat.n_qubits();
  for (const Edge& e : lat.nn_edges()) {
    LocalTerm t = bond(lat, e, TermRole::kBond);
    t.op.add(two_site(n, e.a, 'X', e.b, 'X'), -0.5 * J);
    t.op.add(two_site(n, e.a, 'Y', e.b, 'Y'), -0.5 * J);
    push_nonempty(H.terms, std::move(t));
  }
  for (int i = 0; i < lat.n_sites(); ++i) {
    push_nonempty(H.terms, field(lat, i, 'Z', 0.5 * h));
  }
  return H;
}

PauliSum jordan_wigner(const FermionTerm& term, int n_modes) {
  const int p = term.p, q = term.q;
  if (p < 0 || p >= n_modes || q < 0 || q >= n_modes) {
    throw std::out_of_range("fermionic mode out of range");
  }
  PauliSum out(n_modes);
  const PauliString id(n_modes, 0, 0);
  switch (term.kind) {
    case FermionTerm::Kind::kNumber:
      out.add(id, 0.5);
      out.add(PauliString::single(n_modes, p, 'Z'), -0.5);
      return out;
    case FermionTerm::Kind::kDensityPair: {
      if (p == q) throw std::invalid_argument("n_p n_q needs p != q");
      // (I - Z_p)(I - Z_q) / 4
      out.add(id, 0.25);
      out.add(PauliString::single(n_modes, p, 'Z'), -0.25);
      out.add(PauliString::single(n_modes, q, 'Z'), -0.25);
      out.add(two_site(n_modes, p, 'Z', q, 'Z'), 0.25);
      return out;
    }
    case FermionTerm::Kind::kHopping: {
      if (p == q) throw std::invalid_argument("hopping needs p != q");
      const int lo = std::min(p, q), hi = std::max(p, q);
      std::string sx(n_modes, 'I');
      for (int k = lo + 1; k < hi; ++k) sx[k] = 'Z';
      std::string sy = sx;
      sx[lo] = sx[hi] = 'X';
      sy[lo] = sy[hi] = 'Y';
      out.add(sx, 0.5);
      out.add(sy, 0.5);
      return out;
    }
  }
  throw std::invalid_argument("unsupported fermionic monomial");
}

PauliSum number_operator(int n_modes) {
  PauliSum out(n_modes);
  for (int p = 0; p < n_modes; ++p) {
    out += jordan_wigner({FermionTerm::Kind::kNumber, p, p}, n_modes);
  }
  return out;
}

PauliSum total_z(int n_qubits) {
  PauliSum out(n_qubits);
  for (int q = 0; q < n_qubits; ++q) {
    out.add(PauliString::single(n_qubits, q, 'Z'), 1.0);
  }
  return out;
}

LatticeHamiltonian build_spinless_hubbard(const Lattice& lat, double t,
                                          double U, double mu) {
  require_single_layer(lat, "spinless Hubbard");
  LatticeHamiltonian H{lat, {}, {}};
  H.config.kind = ModelKind::kSpinlessHubbard;
  H.config.t = t;
  H.config.U = U;
  H.config.mu = mu;
  const int n = lat.n_qubits();
  for (const Edge& e : lat.nn_edges()) {
    LocalTerm hop = bond(lat, e, TermRole::kHopping);
    hop.op = -t * jordan_wigner({FermionTerm::Kind::kHopping, e.a, e.b}, n);
    push_nonempty(H.terms, std::move(hop));
  }
  for (const Edge& e : lat.nn_edges()) {
    LocalTerm dens = bond(lat, e, TermRole::kDiagonal);
    dens.op = U * jordan_wigner({FermionTerm::Kind::kDensityPair, e.a, e.b}, n);
    push_nonempty(H.terms, std::move(dens));
  }
  for (int i = 0; i < lat.n_sites(); ++i) {
    LocalTerm chem;
    chem.sites = {i};
    chem.role = TermRole::kDiagonal;
    chem.op = -mu * jordan_wigner({FermionTerm::Kind::kNumber, i, i}, n);
    push_nonempty(H.terms, std::move(chem));
  }
  return H;
}

LatticeHamiltonian build_hubbard(const Lattice& lat, double t, double U,
                                 double mu) {
  if (lat.layers() != 2) {
    throw std::invalid_argument("spinful Hubbard needs a two-layer lattice");
  }
  LatticeHamiltonian H{lat, {}, {}};
  H.config.kind = ModelKind::kHubbard;
  H.config.t = t;
  H.config.U = U;
  H.config.mu = mu;
  const int n = lat.n_qubits();
  const int ns = lat.n_sites();
  for (int layer = 0; layer < 2; ++layer) {
    for (const Edge& e : lat.nn_edges()) {
      LocalTerm hop = bond(lat, e, TermRole::kHopping);
      hop.layer = layer;
      hop.op = -t * jordan_wigner({FermionTerm::Kind::kHopping,
                                   layer * ns + e.a, layer * ns + e.b},
                                  n);
      push_nonempty(H.terms, std::move(hop));
    }
  }
  for (int i = 0; i < ns; ++i) {
    LocalTerm onsite;
    onsite.sites = {i};
    onsite.role = TermRole::kDiagonal;
    onsite.op = U * jordan_wigner({FermionTerm::Kind::kDensityPair, i, ns + i}, n);
    onsite.op -= mu * jordan_wigner({FermionTerm::Kind::kNumber, i, i}, n);
    onsite.op -= mu * jordan_wigner({FermionTerm::Kind::kNumber, ns + i, ns + i}, n);
    push_nonempty(H.terms, std::move(onsite));
  }
  return H;
}

LatticeHamiltonian build_model(const Lattice& lat, const ModelConfig& cfg) {
  cfg.validate();
  switch (cfg.kind) {
    case ModelKind::kTFXYM: return build_tfxym(lat, *cfg.eta, *cfg.h);
    case ModelKind::kTFIM: return build_tfim(lat, *cfg.J, *cfg.h);
    case ModelKind::kBNNNI: return build_bnnni(lat, *cfg.J, *cfg.kappa, *cfg.h);
    case ModelKind::kHCBH: return build_hcbh(lat, *cfg.J, *cfg.h);
    case ModelKind::kSpinlessHubbard:
      return build_spinless_hubbard(lat, *cfg.t, *cfg.U, *cfg.mu);
    case ModelKind::kHubbard: return build_hubbard(lat, *cfg.t, *cfg.U, *cfg.mu);
  }
  throw std::invalid_argument("unknown model");
}

}  // namespace latshot
