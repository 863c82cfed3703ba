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

#ifndef LATSHOT_PAULI_HPP_
#define LATSHOT_PAULI_HPP_

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latshot {

inline constexpr int kMaxQubits = 64;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Hermitian Pauli string in symplectic form. Qubit q carries
//   (x,z) = (0,0) I, (1,0) X, (1,1) Y, (0,1) Z.
// The operator is i^{popcount(x & z)} X^x Z^z, so every string is Hermitian
// and squares to the identity.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int n_qubits = 0;

  PauliString() = default;
  PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask);

  // Leftmost character is qubit 0.
  static PauliString parse(std::string_view text);
  static PauliString single(int n, int qubit, char op);

  bool is_identity() const { return (x | z) == 0; }
  std::uint64_t support() const { return x | z; }
  int weight() const;
  int y_count() const;
  char op_at(int qubit) const;
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (a.n_qubits != b.n_qubits) return a.n_qubits < b.n_qubits;
    if (a.x != b.x) return a.x < b.x;
    return a.z < b.z;
  }
};

// a * b = i^phase_power * product.
struct PauliProduct {
  int phase_power = 0;  // in {0,1,2,3}
  PauliString product;

  std::complex<double> phase() const;
};

PauliProduct pauli_mul(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);
// True iff the strings commute qubit by qubit.
bool qubitwise_commutes(const PauliString& a, const PauliString& b);

// Real linear combination of Pauli strings.
class PauliSum {
 public:
  static constexpr double kPruneThreshold = 1e-14;

  PauliSum() = default;
  explicit PauliSum(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::map<PauliString, double>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Accumulates into an existing entry; the entry is dropped if the result
  // falls below the prune threshold.
  void add(const PauliString& p, double coefficient);
  void add(std::string_view pauli_text, double coefficient);
  double coefficient(const PauliString& p) const;
  double identity_coefficient() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double s);

  // Product of two real sums; imaginary parts must cancel (e.g. a*a, or
  // commuting a and b). Throws if a residual imaginary part exceeds 1e-12.
  PauliSum hermitian_product(const PauliSum& other) const;

  std::string to_text() const;
  static PauliSum from_text(std::string_view text);

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  int n_qubits_ = 0;
  std::map<PauliString, double> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(double s, PauliSum a);

// alpha * a + beta * b, pruned at PauliSum::kPruneThreshold.
PauliSum sum_combine(const PauliSum& a, const PauliSum& b, double alpha,
                     double beta);
PauliSum traceless_part(const PauliSum& a);
// Sum of squared non-identity coefficients, i.e. Tr(A_0^2) / 2^n for the
// traceless part A_0.
double frobenius_norm_sq_over_d(const PauliSum& a);
// Largest |coefficient difference| over the union of both term sets.
double max_coefficient_residual(const PauliSum& a, const PauliSum& b);
// Sum of |coefficients|; an upper bound on the operator norm.
double l1_norm(const PauliSum& a);
// True iff every string has an even number of Y factors, i.e. the matrix in
// the computational basis is real.
bool is_real_matrix(const PauliSum& a);

std::ostream& operator<<(std::ostream& os, const PauliString& p);

}  // namespace latshot

#endif  // LATSHOT_PAULI_HPP_
