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

#include "latshot/oracle/fock.hpp"

#include <stdexcept>

namespace latshot::oracle {

namespace {

bool occupied(long state, int p) { return (state >> p) & 1L; }

}  // namespace

Eigen::MatrixXd fock_hopping(int n_modes, int p, int q) {
  if (p == q) throw std::invalid_argument("hopping needs two modes");
  const long d = 1L << n_modes;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (long s = 0; s < d; ++s) {
    // c_p^dag c_q |s>
    if (!occupied(s, q) || occupied(s, p)) continue;
    const int lo = std::min(p, q), hi = std::max(p, q);
    int between = 0;
    for (int k = lo + 1; k < hi; ++k) between += occupied(s, k) ? 1 : 0;
    const long t = (s & ~(1L << q)) | (1L << p);
    const double sign = (between % 2) ? -1.0 : 1.0;
    m(t, s) += sign;
    m(s, t) += sign;
  }
  return m;
}

Eigen::MatrixXd fock_number(int n_modes, int p) {
  const long d = 1L << n_modes;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (long s = 0; s < d; ++s) m(s, s) = occupied(s, p) ? 1.0 : 0.0;
  return m;
}

Eigen::MatrixXd fock_total_number(int n_modes) {
  const long d = 1L << n_modes;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (long s = 0; s < d; ++s) m(s, s) = __builtin_popcountl(static_cast<unsigned long>(s));
  return m;
}

Eigen::MatrixXd fock_spinless_hubbard(const Lattice& lat, double t, double U,
                                      double mu) {
  const int n = lat.n_sites();
  const long d = 1L << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (const Edge& e : lat.nn_edges()) {
    h -= t * fock_hopping(n, e.a, e.b);
    h += U * fock_number(n, e.a) * fock_number(n, e.b);
  }
  for (int i = 0; i < n; ++i) h -= mu * fock_number(n, i);
  return h;
}

Eigen::MatrixXd fock_hubbard(const Lattice& lat, double t, double U, double mu) {
  const int ns = lat.n_sites();
  const int n = 2 * ns;
  const long d = 1L << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (int spin = 0; spin < 2; ++spin) {
    for (const Edge& e : lat.nn_edges()) {
      h -= t * fock_hopping(n, spin * ns + e.a, spin * ns + e.b);
    }
  }
  for (int i = 0; i < ns; ++i) {
    const Eigen::MatrixXd up = fock_number(n, i), dn = fock_number(n, ns + i);
    h += U * up * dn - mu * (up + dn);
  }
  return h;
}

}  // namespace latshot::oracle
