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

#ifndef LATSHOT_ORACLE_DENSE_HPP_
#define LATSHOT_ORACLE_DENSE_HPP_

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "latshot/lattice.hpp"
#include "latshot/pauli.hpp"
#include "latshot/spectral.hpp"

namespace latshot::oracle {

// Reference implementations built from explicit Kronecker products of 2x2
// matrices. Slow by design; used only to cross-check the library.

Eigen::Matrix2cd pauli_2x2(char op);
// Character k acts on qubit k, which is bit k of the basis index.
Eigen::MatrixXcd kron_string(const std::string& ops);
Eigen::MatrixXcd dense_matrix(const PauliSum& H);

struct DenseSpectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXcd vectors;
};
DenseSpectrum dense_spectrum(const PauliSum& H);

Eigen::VectorXcd to_eigen(const StateVector& psi);
StateVector from_eigen(const Eigen::VectorXcd& v);

double dense_expectation(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& psi);
double dense_variance(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& psi);
// Tr(A_0^2)/d for the traceless part A_0 of A.
double dense_frobenius_sq_over_d(const Eigen::MatrixXcd& A);

// Brute-force minimum of sum Var_b / M_b over all integer allocations with
// M_b >= 1 and sum M_b = M.
double brute_force_allocation_cost(const std::vector<double>& variances,
                                   int M);

}  // namespace latshot::oracle

#endif  // LATSHOT_ORACLE_DENSE_HPP_
