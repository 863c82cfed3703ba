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

#ifndef LATSHOT_ORACLE_FOCK_HPP_
#define LATSHOT_ORACLE_FOCK_HPP_

#include <Eigen/Dense>

#include "latshot/lattice.hpp"

namespace latshot::oracle {

// Hamiltonians assembled directly in the occupation-number basis: bit p of
// the index is the occupation of mode p, and c_p^dag c_q picks up the sign
// (-1)^(occupied modes strictly between p and q).

Eigen::MatrixXd fock_hopping(int n_modes, int p, int q);  // c_p^dag c_q + h.c.
Eigen::MatrixXd fock_number(int n_modes, int p);

// -t sum_<ij> (c_i^dag c_j + h.c.) + U sum_<ij> n_i n_j - mu sum_i n_i
Eigen::MatrixXd fock_spinless_hubbard(const Lattice& lat, double t, double U,
                                      double mu);
// Modes: layer 0 is spin up, layer 1 spin down, site-major inside a layer.
Eigen::MatrixXd fock_hubbard(const Lattice& lat, double t, double U, double mu);
Eigen::MatrixXd fock_total_number(int n_modes);

}  // namespace latshot::oracle

#endif  // LATSHOT_ORACLE_FOCK_HPP_
