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

#include "latshot/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace latshot {
namespace {

std::uint64_t mask_for(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_same_size(int a, int b) {
  if (a != b) {
    throw DimensionError("qubit count mismatch: " + std::to_string(a) +
                         " vs " + std::to_string(b));
  }
}

}  // namespace

PauliString::PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask)
    : x(x_mask), z(z_mask), n_qubits(n) {
  if (n < 0 || n > kMaxQubits) {
    throw DimensionError("qubit count out of range: " + std::to_string(n));
  }
  if (((x | z) & ~mask_for(n)) != 0) {
    throw DimensionError("mask bits set beyond qubit count");
  }
}

PauliString PauliString::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  if (n > kMaxQubits) throw DimensionError("Pauli string too long");
  std::uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw std::invalid_argument("bad Pauli character '" +
                                    std::string(1, text[q]) + "'");
    }
  }
  return PauliString(n, x, z);
}

PauliString PauliString::single(int n, int qubit, char op) {
  if (qubit < 0 || qubit >= n) throw DimensionError("qubit index out of range");
  std::string s(n, 'I');
  s[qubit] = op;
  return parse(s);
}

int PauliString::weight() const { return std::popcount(x | z); }

int PauliString::y_count() const { return std::popcount(x & z); }

char PauliString::op_at(int qubit) const {
  const bool xb = (x >> qubit) & 1, zb = (z >> qubit) & 1;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::str() const {
  std::string s(n_qubits, 'I');
  for (int q = 0; q < n_qubits; ++q) s[q] = op_at(q);
  return s;
}

std::complex<double> PauliProduct::phase() const {
  static constexpr std::complex<double> kPow[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPow[phase_power & 3];
}

PauliProduct pauli_mul(const PauliString& a, const PauliString& b) {
  check_same_size(a.n_qubits, b.n_qubits);
  // Per-qubit exponent of i, summed over qubits (Aaronson-Gottesman g).
  const std::uint64_t ay = a.x & a.z, ax = a.x & ~a.z, az = ~a.x & a.z;
  const std::uint64_t bx = b.x & ~b.z, by = b.x & b.z, bz = ~b.x & b.z;
  int e = 0;
  e += std::popcount(ay & bz) - std::popcount(ay & bx);
  e += std::popcount(ax & by) - std::popcount(ax & bz);
  e += std::popcount(az & bx) - std::popcount(az & by);
  PauliProduct out;
  out.phase_power = ((e % 4) + 4) % 4;
  out.product = PauliString(a.n_qubits, a.x ^ b.x, a.z ^ b.z);
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_size(a.n_qubits, b.n_qubits);
  return (std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1) == 0;
}

bool qubitwise_commutes(const PauliString& a, const PauliString& b) {
  check_same_size(a.n_qubits, b.n_qubits);
  const std::uint64_t both = a.support() & b.support();
  return ((a.x ^ b.x) & both) == 0 && ((a.z ^ b.z) & both) == 0;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw DimensionError("qubit count out of range");
  }
}

void PauliSum::add(const PauliString& p, double coefficient) {
  check_same_size(n_qubits_, p.n_qubits);
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (std::abs(coefficient) >= kPruneThreshold) terms_.emplace(p, coefficient);
    return;
  }
  it->second += coefficient;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

void PauliSum::add(std::string_view pauli_text, double coefficient) {
  add(PauliString::parse(pauli_text), coefficient);
}

double PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

double PauliSum::identity_coefficient() const {
  return coefficient(PauliString(n_qubits_, 0, 0));
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same_size(n_qubits_, other.n_qubits_);
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same_size(n_qubits_, other.n_qubits_);
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(double s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (std::abs(it->second) < kPruneThreshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

PauliSum PauliSum::hermitian_product(const PauliSum& other) const {
  check_same_size(n_qubits_, other.n_qubits_);
  std::map<PauliString, std::complex<double>> acc;
  for (const auto& [pa, ca] : terms_) {
    for (const auto& [pb, cb] : other.terms_) {
      const PauliProduct pr = pauli_mul(pa, pb);
      acc[pr.product] += pr.phase() * (ca * cb);
    }
  }
  PauliSum out(n_qubits_);
  for (const auto& [p, c] : acc) {
    if (std::abs(c.imag()) > 1e-12) {
      throw std::domain_error("product is not Hermitian: term " + p.str());
    }
    out.add(p, c.real());
  }
  return out;
}

std::string PauliSum::to_text() const {
  std::string out;
  char buf[64];
  for (const auto& [p, c] : terms_) {
    std::snprintf(buf, sizeof(buf), "%.17g ", c);
    out += buf;
    out += p.str();
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  PauliSum out;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string coef_text, pauli_text;
    if (!(ls >> coef_text >> pauli_text)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected '<coefficient> <pauli>'");
    }
    const double c = std::stod(coef_text);
    const PauliString p = PauliString::parse(pauli_text);
    if (n < 0) {
      n = p.n_qubits;
      out = PauliSum(n);
    } else if (p.n_qubits != n) {
      throw DimensionError("line " + std::to_string(lineno) +
                           ": inconsistent string length");
    }
    out.add(p, c);
  }
  return out;
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(double s, PauliSum a) { return a *= s; }

PauliSum sum_combine(const PauliSum& a, const PauliSum& b, double alpha,
                     double beta) {
  check_same_size(a.n_qubits(), b.n_qubits());
  std::map<PauliString, double> acc;
  for (const auto& [p, c] : a.terms()) acc[p] += alpha * c;
  for (const auto& [p, c] : b.terms()) acc[p] += beta * c;
  PauliSum out(a.n_qubits());
  for (const auto& [p, c] : acc) out.add(p, c);
  return out;
}

PauliSum traceless_part(const PauliSum& a) {
  PauliSum out(a.n_qubits());
  for (const auto& [p, c] : a.terms()) {
    if (!p.is_identity()) out.add(p, c);
  }
  return out;
}

double frobenius_norm_sq_over_d(const PauliSum& a) {
  double s = 0;
  for (const auto& [p, c] : a.terms()) {
    if (!p.is_identity()) s += c * c;
  }
  return s;
}

double max_coefficient_residual(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.n_qubits(), b.n_qubits());
  double worst = 0;
  for (const auto& [p, c] : a.terms()) {
    worst = std::max(worst, std::abs(c - b.coefficient(p)));
  }
  for (const auto& [p, c] : b.terms()) {
    if (a.terms().count(p) == 0) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

double l1_norm(const PauliSum& a) {
  double s = 0;
  for (const auto& [p, c] : a.terms()) s += std::abs(c);
  return s;
}

bool is_real_matrix(const PauliSum& a) {
  return std::all_of(a.terms().begin(), a.terms().end(), [](const auto& t) {
    return (t.first.y_count() & 1) == 0;
  });
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) {
  return os << p.str();
}

}  // namespace latshot
