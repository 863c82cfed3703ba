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

#include "latshot/oracle/dense.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace latshot::oracle {

Eigen::Matrix2cd pauli_2x2(char op) {
  const std::complex<double> i(0, 1);
  Eigen::Matrix2cd m;
  switch (op) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument(std::string("bad Pauli letter ") + op);
  }
  return m;
}

Eigen::MatrixXcd kron_string(const std::string& ops) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  // The last qubit is the most significant bit, so it is the left factor.
  for (char op : ops) {
    const Eigen::Matrix2cd p = pauli_2x2(op);
    Eigen::MatrixXcd next(2 * m.rows(), 2 * m.cols());
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) = p(a, b) * m;
      }
    }
    m = std::move(next);
  }
  return m;
}

Eigen::MatrixXcd dense_matrix(const PauliSum& H) {
  const Eigen::Index d = Eigen::Index{1} << H.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [p, c] : H.terms()) m += c * kron_string(p.str());
  return m;
}

DenseSpectrum dense_spectrum(const PauliSum& H) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_matrix(H));
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXcd to_eigen(const StateVector& psi) {
  return Eigen::Map<const Eigen::VectorXcd>(psi.amp.data(),
                                            static_cast<Eigen::Index>(psi.dim()));
}

StateVector from_eigen(const Eigen::VectorXcd& v) {
  int n = 0;
  while ((Eigen::Index{1} << n) < v.size()) ++n;
  StateVector s(n);
  for (Eigen::Index i = 0; i < v.size(); ++i) s.amp[static_cast<std::size_t>(i)] = v(i);
  return s;
}

double dense_expectation(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& psi) {
  return psi.dot(A * psi).real();
}

double dense_variance(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& psi) {
  const Eigen::VectorXcd a = A * psi;
  const double m = psi.dot(a).real();
  return a.squaredNorm() - m * m;
}

double dense_frobenius_sq_over_d(const Eigen::MatrixXcd& A) {
  const double d = static_cast<double>(A.rows());
  const std::complex<double> tr = A.trace();
  const Eigen::MatrixXcd a0 =
      A - (tr / d) * Eigen::MatrixXcd::Identity(A.rows(), A.cols());
  return (a0 * a0).trace().real() / d;
}

double brute_force_allocation_cost(const std::vector<double>& variances, int M) {
  const int K = static_cast<int>(variances.size());
  if (M < K) throw std::invalid_argument("M smaller than the number of parts");
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> m(static_cast<std::size_t>(K), 1);
  std::function<void(int, int)> rec = [&](int b, int left) {
    if (b == K - 1) {
      m[b] = left;
      double c = 0;
      for (int k = 0; k < K; ++k) c += variances[k] / m[k];
      best = std::min(best, c);
      return;
    }
    for (int v = 1; v <= left - (K - 1 - b); ++v) {
      m[b] = v;
      rec(b + 1, left - v);
    }
  };
  rec(0, M);
  return best;
}

}  // namespace latshot::oracle
