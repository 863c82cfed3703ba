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

#ifndef LATSHOT_SPECTRAL_HPP_
#define LATSHOT_SPECTRAL_HPP_

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "latshot/partition.hpp"
#include "latshot/pauli.hpp"

namespace latshot {

using cplx = std::complex<double>;

struct StateVector {
  int n_qubits = 0;
  std::vector<cplx> amp;
  std::string provenance;
  // False for perturbed states, which are kept unnormalized on purpose.
  bool normalized = true;

  StateVector() = default;
  explicit StateVector(int n) : n_qubits(n), amp(std::size_t{1} << n) {}

  std::size_t dim() const { return amp.size(); }
  double norm() const;
  static StateVector basis(int n, std::uint64_t index);
};

// Header: 8-byte magic "LSVEC01\0", uint32 n_qubits, uint32 reserved; then
// 2*d little-endian doubles (re, im).
void write_state(std::ostream& os, const StateVector& psi);
StateVector read_state(std::istream& is);

// Deterministic chunked reductions.
cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b);
double norm_sq(const std::vector<cplx>& a);

// Pauli sum grouped by X mask for matrix-free application.
class CompiledOperator {
 public:
  explicit CompiledOperator(const PauliSum& H);

  int n_qubits() const { return n_; }
  void apply(const cplx* in, cplx* out) const;
  std::vector<cplx> apply(const std::vector<cplx>& in) const;

 private:
  struct Term {
    std::uint64_t z;
    cplx coef;
  };
  struct Group {
    std::uint64_t x;
    std::vector<Term> terms;
  };
  int n_ = 0;
  std::vector<Group> groups_;
};

StateVector apply(const PauliSum& H, const StateVector& psi);

struct EigenSolution {
  std::vector<double> energies;  // ascending
  std::vector<StateVector> states;
  double gap = 0;
  bool degenerate = false;
  std::string method;  // "dense" or "lanczos"
  double max_residual = 0;
  int iterations = 0;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  int dense_max_qubits = 10;
  int max_qubits = 26;
  int krylov_dim = 0;  // 0 = choose from k and dimension
  int max_restarts = 500;
  double tolerance = 1e-11;  // residual, relative to sum |c|
  std::uint64_t seed = 12345;
  double degeneracy_tol = 1e-8;  // relative to max(1, |E0|)
  bool force_lanczos = false;
  bool force_dense = false;
  std::size_t max_memory_bytes = std::size_t{6} << 30;
};

// The k lowest eigenpairs. The first excited level is always resolved so the
// gap and the degeneracy flag are meaningful.
EigenSolution ground_state(const PauliSum& H, int k = 1,
                           const SolverOptions& opts = {});

double expectation(const PauliSum& A, const StateVector& psi);
double variance(const PauliSum& A, const StateVector& psi);
double covariance_sym(const PauliSum& A, const PauliSum& B,
                      const StateVector& psi);
// <[A, B]>, purely imaginary for Hermitian A, B.
cplx commutator_expectation(const PauliSum& A, const PauliSum& B,
                            const StateVector& psi);

class UndefinedCorrelation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
double correlation(const PauliSum& A, const PauliSum& B,
                   const StateVector& psi);

struct MomentStats {
  double mean = 0;           // <A>
  double second_moment = 0;  // <A^2>
  double variance = 0;
  double frob_sq_over_d = 0;
  double identity_coeff = 0;
  std::string label;
};

MomentStats moment_stats(const PauliSum& A, const StateVector& psi,
                         std::string label = "");
std::vector<MomentStats> moment_stats(const Partitioning& parts,
                                      const StateVector& psi);

}  // namespace latshot

#endif  // LATSHOT_SPECTRAL_HPP_
