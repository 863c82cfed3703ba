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

#include "latshot/partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

namespace latshot {
namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool letters_only(const PauliString& p, char letter) {
  switch (letter) {
    case 'X': return p.z == 0;
    case 'Z': return p.x == 0;
    case 'Y': return p.x == p.z;
  }
  return false;
}

Partitioning letter_classes(const PauliSum& H, const std::string& letters) {
  Partitioning out;
  out.spec = PartitionSpec::pauli();
  out.label = out.spec.label();
  std::vector<PauliSum> groups(letters.size(), PauliSum(H.n_qubits()));
  for (const auto& [p, c] : H.terms()) {
    if (p.is_identity()) {
      groups[0].add(p, c);
      continue;
    }
    bool placed = false;
    for (std::size_t k = 0; k < letters.size() && !placed; ++k) {
      if (letters_only(p, letters[k])) {
        groups[k].add(p, c);
        placed = true;
      }
    }
    if (!placed) {
      throw PartitionError("term " + p.str() +
                           " does not fit the model's baseline grouping");
    }
  }
  for (auto& g : groups) {
    if (!g.empty()) out.parts.push_back(std::move(g));
  }
  return out;
}

Partitioning greedy_commuting(const PauliSum& H) {
  std::vector<std::pair<PauliString, double>> terms(H.terms().begin(),
                                                    H.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });
  std::vector<std::vector<PauliString>> members;
  Partitioning out;
  out.spec = PartitionSpec::pauli();
  out.label = out.spec.label();
  for (const auto& [p, c] : terms) {
    std::size_t g = 0;
    for (; g < members.size(); ++g) {
      const bool fits = std::all_of(
          members[g].begin(), members[g].end(),
          [&](const PauliString& q) { return commutes(p, q); });
      if (fits) break;
    }
    if (g == members.size()) {
      members.emplace_back();
      out.parts.emplace_back(H.n_qubits());
    }
    members[g].push_back(p);
    out.parts[g].add(p, c);
  }
  return out;
}

bool terms_commute(const PauliSum& a, const PauliSum& b) {
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [q, d] : b.terms()) {
      if (!commutes(p, q)) return false;
    }
  }
  return true;
}

bool sites_overlap(const LocalTerm& a, const LocalTerm& b) {
  if (a.layer != b.layer) return false;
  for (int s : a.sites) {
    if (std::find(b.sites.begin(), b.sites.end(), s) != b.sites.end()) {
      return true;
    }
  }
  return false;
}

Partitioning hopping_coloring(const LatticeHamiltonian& H) {
  const int n = H.n_qubits();
  std::map<Direction, std::vector<std::vector<const LocalTerm*>>> colors;
  PauliSum diagonal(n);
  for (const LocalTerm& t : H.terms) {
    if (t.role != TermRole::kHopping) {
      diagonal += t.op;
      continue;
    }
    auto& classes = colors[t.dir];
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& cls) {
      return std::none_of(cls.begin(), cls.end(), [&](const LocalTerm* m) {
        return sites_overlap(*m, t) || !terms_commute(m->op, t.op);
      });
    });
    if (it == classes.end()) {
      classes.emplace_back();
      it = std::prev(classes.end());
    }
    it->push_back(&t);
  }
  Partitioning out;
  out.spec = PartitionSpec::pauli();
  out.label = out.spec.label();
  out.layers = H.lattice.layers();
  out.fermionic = true;
  for (Direction d : {Direction::kX, Direction::kY}) {
    for (const auto& cls : colors[d]) {
      PauliSum part(n);
      for (const LocalTerm* t : cls) part += t->op;
      if (!part.empty()) out.parts.push_back(std::move(part));
    }
  }
  if (!diagonal.empty()) out.parts.push_back(std::move(diagonal));
  return out;
}

int axial_extent(const Lattice& lat, const LocalTerm& t) {
  int ext = 0;
  for (int a : t.sites) {
    for (int b : t.sites) {
      const int dx = std::abs(lat.ix(a) - lat.ix(b));
      const int dy = std::abs(lat.iy(a) - lat.iy(b));
      const int ex = lat.periodic() ? std::min(dx, lat.nx() - dx) : dx;
      const int ey = lat.periodic() ? std::min(dy, lat.ny() - dy) : dy;
      ext = std::max({ext, ex, ey});
    }
  }
  return ext;
}

void check_preconditions(const Lattice& lat, const PartitionSpec& spec) {
  const int nx = lat.nx(), ny = lat.ny();
  switch (spec.kind) {
    case PartitionKind::kGeo1D:
      if (spec.L < 1 || nx % spec.L != 0 || (spec.L > 1 && nx / spec.L < 2)) {
        throw PartitionError("Geo1D(L=" + std::to_string(spec.L) +
                             ") needs nx divisible by L with at least two "
                             "strips; nx=" + std::to_string(nx));
      }
      break;
    case PartitionKind::kGeo2D:
      if (spec.Lx < 1 || spec.Ly < 1 || nx % spec.Lx != 0 ||
          ny % spec.Ly != 0 || nx / spec.Lx < 2 || ny / spec.Ly < 2) {
        throw PartitionError("Geo2D(" + std::to_string(spec.Lx) + "x" +
                             std::to_string(spec.Ly) +
                             ") needs nx, ny divisible by the patch size with "
                             "at least two patches per direction; lattice " +
                             std::to_string(nx) + "x" + std::to_string(ny));
      }
      break;
    case PartitionKind::kTwoLocal:
      if (nx % 2 != 0 || ny % 2 != 0) {
        throw PartitionError("TwoLocal needs even nx and ny; lattice " +
                             std::to_string(nx) + "x" + std::to_string(ny));
      }
      break;
    default:
      throw PartitionError("not a geometric partition kind");
  }
}

std::vector<std::vector<int>> patch_lists(const Covering& cov) {
  std::map<int, std::vector<int>> by_id;
  for (int s = 0; s < static_cast<int>(cov.size()); ++s) by_id[cov[s]].push_back(s);
  std::vector<std::vector<int>> out;
  for (auto& [id, sites] : by_id) out.push_back(std::move(sites));
  return out;
}

bool fits(const Covering& cov, const LocalTerm& t) {
  for (int s : t.sites) {
    if (cov[s] != cov[t.sites.front()]) return false;
  }
  return true;
}

}  // namespace

std::string PartitionSpec::label() const {
  switch (kind) {
    case PartitionKind::kPauliBaseline: return "pauli";
    case PartitionKind::kGeo1D: return "geo1d_L" + std::to_string(L);
    case PartitionKind::kGeo2D:
      return "geo2d_" + std::to_string(Lx) + "x" + std::to_string(Ly);
    case PartitionKind::kTwoLocal: return "two_local";
    case PartitionKind::kWhole: return "whole";
  }
  return "unknown";
}

PartitionSpec PartitionSpec::parse(std::string_view label) {
  const std::string s(label);
  if (s == "pauli") return pauli();
  if (s == "two_local") return two_local();
  if (s == "whole") return whole();
  if (s.rfind("geo1d_L", 0) == 0) {
    return geo1d(std::stoi(s.substr(7)));
  }
  if (s.rfind("geo2d_", 0) == 0) {
    const auto x = s.find('x', 6);
    if (x != std::string::npos) {
      return geo2d(std::stoi(s.substr(6, x - 6)), std::stoi(s.substr(x + 1)));
    }
  }
  throw std::invalid_argument("unknown partition label '" + s + "'");
}

PauliSum Partitioning::total() const {
  if (parts.empty()) return PauliSum();
  PauliSum out(parts.front().n_qubits());
  for (const auto& p : parts) out += p;
  return out;
}

std::vector<std::vector<int>> Partitioning::qubit_patches(
    std::size_t b, const Lattice& lat) const {
  std::vector<std::vector<int>> out;
  for (const auto& patch : patches.at(b)) {
    std::vector<int> qubits;
    for (int layer = 0; layer < lat.layers(); ++layer) {
      for (int s : patch) qubits.push_back(layer * lat.n_sites() + s);
    }
    std::sort(qubits.begin(), qubits.end());
    out.push_back(std::move(qubits));
  }
  return out;
}

Partitioning pauli_baseline(const PauliSum& H, std::optional<ModelKind> hint) {
  if (!hint) return greedy_commuting(H);
  switch (*hint) {
    case ModelKind::kTFIM:
    case ModelKind::kBNNNI: return letter_classes(H, "ZX");
    case ModelKind::kTFXYM:
    case ModelKind::kHCBH: return letter_classes(H, "XYZ");
    case ModelKind::kSpinlessHubbard:
    case ModelKind::kHubbard:
      throw PartitionError(
          "fermionic baseline needs the lattice terms; pass the "
          "LatticeHamiltonian");
  }
  return greedy_commuting(H);
}

Partitioning pauli_baseline(const LatticeHamiltonian& H) {
  if (is_fermionic(H.config.kind)) return hopping_coloring(H);
  Partitioning out = pauli_baseline(H.pauli(), H.config.kind);
  out.layers = H.lattice.layers();
  return out;
}

Partitioning whole_partition(const PauliSum& H) {
  Partitioning out;
  out.spec = PartitionSpec::whole();
  out.label = out.spec.label();
  out.parts = {H};
  return out;
}

std::vector<Covering> geometric_coverings(const Lattice& lat,
                                          const PartitionSpec& spec,
                                          int range) {
  check_preconditions(lat, spec);
  const int nx = lat.nx(), ny = lat.ny(), ns = lat.n_sites();
  const int shifts = std::max(2, range + 1);
  std::vector<Covering> out;
  auto make = [&](auto patch_of) {
    Covering cov(ns);
    for (int s = 0; s < ns; ++s) cov[s] = patch_of(lat.ix(s), lat.iy(s));
    out.push_back(std::move(cov));
  };
  switch (spec.kind) {
    case PartitionKind::kGeo1D:
      if (spec.L == 1) {
        make([](int ix, int) { return ix; });  // columns
        make([](int, int iy) { return iy; });  // rows
      } else {
        for (int k = 0; k < shifts; ++k) {
          make([&, k](int ix, int) { return mod(ix - k, nx) / spec.L; });
        }
      }
      break;
    case PartitionKind::kGeo2D:
      for (int k = 0; k < shifts; ++k) {
        make([&, k](int ix, int iy) {
          return (mod(ix - k, nx) / spec.Lx) * ny + mod(iy - k, ny) / spec.Ly;
        });
      }
      break;
    case PartitionKind::kTwoLocal:
      for (int k = 0; k < 2; ++k) {
        make([&, k](int ix, int iy) { return (mod(ix - k, nx) / 2) * ny + iy; });
      }
      for (int k = 0; k < 2; ++k) {
        make([&, k](int ix, int iy) { return ix * ny + mod(iy - k, ny) / 2; });
      }
      break;
    default: break;
  }
  return out;
}

Partitioning geometric_partition(const LatticeHamiltonian& H,
                                 const PartitionSpec& spec) {
  const Lattice& lat = H.lattice;
  int range = 1;
  for (const LocalTerm& t : H.terms) range = std::max(range, axial_extent(lat, t));
  if (spec.kind == PartitionKind::kTwoLocal && range > 1) {
    throw PartitionError("TwoLocal needs a nearest-neighbour 2-local model");
  }
  const std::vector<Covering> covs = geometric_coverings(lat, spec, range);
  Partitioning out;
  out.spec = spec;
  out.label = spec.label();
  out.layers = lat.layers();
  out.fermionic = is_fermionic(H.config.kind);
  out.parts.assign(covs.size(), PauliSum(H.n_qubits()));
  out.part_terms.resize(covs.size());
  for (const Covering& c : covs) out.patches.push_back(patch_lists(c));
  for (const LocalTerm& t : H.terms) {
    std::vector<std::size_t> hosts;
    for (std::size_t k = 0; k < covs.size(); ++k) {
      if (fits(covs[k], t)) hosts.push_back(k);
    }
    if (hosts.empty()) {
      std::string where;
      for (int s : t.sites) where += " " + std::to_string(s);
      throw PartitionError(spec.label() +
                           ": interaction range exceeds the cut spacing "
                           "(term on sites" + where + " fits no part)");
    }
    const double share = 1.0 / static_cast<double>(hosts.size());
    for (std::size_t k : hosts) {
      LocalTerm piece = t;
      piece.op *= share;
      out.parts[k] += piece.op;
      out.part_terms[k].push_back(std::move(piece));
    }
  }
  return out;
}

CutPair make_cut_pair(const LatticeHamiltonian& H, const PartitionSpec& spec) {
  if (spec.kind != PartitionKind::kGeo1D && spec.kind != PartitionKind::kGeo2D) {
    throw PartitionError("cut pairs are defined for Geo1D and Geo2D only");
  }
  int range = 1;
  for (const LocalTerm& t : H.terms) range = std::max(range, axial_extent(H.lattice, t));
  const auto covs = geometric_coverings(H.lattice, spec, range);
  if (covs.size() != 2) {
    throw PartitionError(spec.label() + " has " + std::to_string(covs.size()) +
                         " parts; cut pairs need two");
  }
  CutPair out{PauliSum(H.n_qubits()), PauliSum(H.n_qubits())};
  for (const LocalTerm& t : H.terms) {
    const bool in1 = fits(covs[0], t), in2 = fits(covs[1], t);
    if (!in1 && !in2) {
      throw PartitionError(spec.label() + ": term fits neither part");
    }
    if (in2 && !in1) out.h_cut += t.op;
    if (in1 && !in2) out.h_cut_prime += t.op;
  }
  return out;
}

Partitioning make_partition(const LatticeHamiltonian& H,
                            const PartitionSpec& spec) {
  switch (spec.kind) {
    case PartitionKind::kPauliBaseline: return pauli_baseline(H);
    case PartitionKind::kWhole: return whole_partition(H.pauli());
    default: return geometric_partition(H, spec);
  }
}

PartitionReport validate_partition(const Partitioning& p, const PauliSum& H) {
  PartitionReport rep;
  rep.residual = max_coefficient_residual(p.total(), H);
  if (p.spec.kind == PartitionKind::kPauliBaseline) {
    for (std::size_t b = 0; b < p.parts.size(); ++b) {
      std::vector<PauliString> strings;
      for (const auto& [s, c] : p.parts[b].terms()) strings.push_back(s);
      for (std::size_t i = 0; i < strings.size(); ++i) {
        for (std::size_t j = i + 1; j < strings.size(); ++j) {
          if (!commutes(strings[i], strings[j])) {
            rep.commutation_violations.push_back(
                "part " + std::to_string(b) + ": " + strings[i].str() + " vs " +
                strings[j].str());
          }
        }
      }
    }
  }
  if (p.spec.geometric()) {
    for (std::size_t b = 0; b < p.patches.size(); ++b) {
      std::map<int, int> patch_of;
      for (std::size_t k = 0; k < p.patches[b].size(); ++k) {
        for (int s : p.patches[b][k]) {
          if (!patch_of.emplace(s, static_cast<int>(k)).second) {
            rep.patch_violations.push_back("part " + std::to_string(b) +
                                           ": patches overlap at site " +
                                           std::to_string(s));
          }
        }
      }
      if (b < p.part_terms.size()) {
        for (const LocalTerm& t : p.part_terms[b]) {
          std::set<int> ids;
          for (int s : t.sites) ids.insert(patch_of.count(s) ? patch_of[s] : -1);
          if (ids.size() != 1 || *ids.begin() < 0) {
            rep.patch_violations.push_back("part " + std::to_string(b) +
                                           ": local term crosses patches");
          }
        }
      }
      if (!p.fermionic && p.layers == 1) {
        for (const auto& [s, c] : p.parts[b].terms()) {
          std::set<int> ids;
          for (int q = 0; q < s.n_qubits; ++q) {
            if ((s.support() >> q) & 1) {
              ids.insert(patch_of.count(q) ? patch_of[q] : -1);
            }
          }
          if (ids.size() > 1 || (ids.size() == 1 && *ids.begin() < 0)) {
            rep.patch_violations.push_back("part " + std::to_string(b) +
                                           ": string " + s.str() +
                                           " crosses patches");
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace latshot
