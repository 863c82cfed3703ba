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

#include "latshot/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace latshot {
namespace {

constexpr std::size_t kChunk = std::size_t{1} << 12;
constexpr char kMagic[8] = {'L', 'S', 'V', 'E', 'C', '0', '1', '\0'};

cplx i_pow(int k) {
  static constexpr cplx kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPow[k & 3];
}

void check_dims(const PauliSum& A, const StateVector& psi) {
  if (A.n_qubits() != psi.n_qubits) {
    throw DimensionError("operator acts on " + std::to_string(A.n_qubits()) +
                         " qubits, state has " + std::to_string(psi.n_qubits));
  }
}

void axpy(cplx a, const std::vector<cplx>& x, std::vector<cplx>& y) {
  const std::int64_t d = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < d; ++i) y[i] += a * x[i];
}

void scale(std::vector<cplx>& y, double s) {
  const std::int64_t d = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < d; ++i) y[i] *= s;
}

template <typename Matrix>
Matrix dense_matrix(const PauliSum& H) {
  const std::size_t d = std::size_t{1} << H.n_qubits();
  Matrix M = Matrix::Zero(d, d);
  for (const auto& [p, c] : H.terms()) {
    const cplx ph = i_pow(p.y_count()) * c;
    for (std::size_t j = 0; j < d; ++j) {
      const double sign = (std::popcount(j & p.z) & 1) ? -1.0 : 1.0;
      if constexpr (std::is_same_v<typename Matrix::Scalar, double>) {
        M(j ^ p.x, j) += sign * ph.real();
      } else {
        M(j ^ p.x, j) += sign * ph;
      }
    }
  }
  return M;
}

EigenSolution dense_solve(const PauliSum& H, int k) {
  const int n = H.n_qubits();
  const std::size_t d = std::size_t{1} << n;
  EigenSolution sol;
  sol.method = "dense";
  const int keep = static_cast<int>(std::min<std::size_t>(d, std::max(k, 2)));
  auto fill = [&](const auto& es) {
    for (int i = 0; i < keep; ++i) {
      sol.energies.push_back(es.eigenvalues()(i));
      StateVector v(n);
      for (std::size_t j = 0; j < d; ++j) v.amp[j] = cplx(es.eigenvectors()(j, i));
      v.provenance = "eigenstate(" + std::to_string(i) + ")";
      sol.states.push_back(std::move(v));
    }
  };
  if (is_real_matrix(H)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        dense_matrix<Eigen::MatrixXd>(H));
    fill(es);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        dense_matrix<Eigen::MatrixXcd>(H));
    fill(es);
  }
  return sol;
}

struct RitzPairs {
  std::vector<double> theta;
  std::vector<std::vector<cplx>> vecs;
  int matvecs = 0;
};

void deflate(std::vector<cplx>& w, const std::vector<std::vector<cplx>>& locked) {
  for (const auto& l : locked) axpy(-inner(l, w), l, w);
}

// Thick-restart Lanczos with full reorthogonalization, restricted to the
// orthogonal complement of `locked`.
RitzPairs thick_restart_lanczos(const CompiledOperator& op, std::size_t dim,
                                int nev,
                                const std::vector<std::vector<cplx>>& locked,
                                const SolverOptions& o, double op_scale,
                                std::uint64_t seed) {
  const std::size_t avail = dim - locked.size();
  if (avail < static_cast<std::size_t>(nev) + 1) {
    throw SolverError("Krylov space too small for requested eigenpairs");
  }
  int ncv = o.krylov_dim > 0 ? o.krylov_dim : std::max(2 * nev + 20, 40);
  const std::size_t bytes_per_vec = dim * sizeof(cplx);
  const std::size_t fit = o.max_memory_bytes / bytes_per_vec;
  ncv = static_cast<int>(std::min<std::size_t>(
      {static_cast<std::size_t>(ncv), avail - 1, fit > 2 ? fit / 2 : 0}));
  if (ncv < nev + 2) {
    throw SolverError("not enough memory for a Krylov basis of " +
                      std::to_string(nev + 2) + " vectors of dimension " +
                      std::to_string(dim));
  }
  const double tol = o.tolerance * op_scale;

  std::vector<std::vector<cplx>> V(ncv + 1, std::vector<cplx>(dim));
  {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    for (auto& a : V[0]) a = cplx(g(rng), g(rng));
    deflate(V[0], locked);
    deflate(V[0], locked);
    scale(V[0], 1.0 / std::sqrt(norm_sq(V[0])));
  }
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(ncv, ncv);
  RitzPairs out;
  int j0 = 0;
  double beta = 0;
  for (int restart = 0; restart <= o.max_restarts; ++restart) {
    int m = ncv;
    bool invariant = false;
    for (int j = j0; j < ncv; ++j) {
      std::vector<cplx> w = op.apply(V[j]);
      ++out.matvecs;
      deflate(w, locked);
      std::vector<cplx> h(j + 1, 0.0);
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i <= j; ++i) {
          const cplx c = inner(V[i], w);
          h[i] += c;
          axpy(-c, V[i], w);
        }
      }
      if (!locked.empty()) deflate(w, locked);
      for (int i = 0; i < j; ++i) {
        T(i, j) = h[i];
        T(j, i) = std::conj(h[i]);
      }
      T(j, j) = h[j].real();
      beta = std::sqrt(norm_sq(w));
      if (beta < 1e-13 * op_scale) {
        m = j + 1;
        invariant = true;
        beta = 0;
        break;
      }
      scale(w, 1.0 / beta);
      V[j + 1] = std::move(w);
      if (j + 1 < ncv) {
        T(j + 1, j) = beta;
        T(j, j + 1) = beta;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(T.topLeftCorner(m, m));
    const Eigen::VectorXd& theta = es.eigenvalues();
    const Eigen::MatrixXcd& S = es.eigenvectors();
    const int want = std::min(nev, m);
    bool converged = true;
    for (int i = 0; i < want; ++i) {
      if (beta * std::abs(S(m - 1, i)) > tol) converged = false;
    }
    if (converged || invariant || restart == o.max_restarts) {
      if (!converged && !invariant) {
        std::ostringstream msg;
        msg << "Lanczos did not converge after " << o.max_restarts
            << " restarts (" << out.matvecs << " matvecs); worst residual "
            << beta * S.row(m - 1).head(want).cwiseAbs().maxCoeff()
            << " vs tolerance " << tol;
        throw SolverError(msg.str());
      }
      for (int i = 0; i < want; ++i) {
        std::vector<cplx> y(dim, 0.0);
        for (int l = 0; l < m; ++l) axpy(S(l, i), V[l], y);
        scale(y, 1.0 / std::sqrt(norm_sq(y)));
        out.theta.push_back(theta(i));
        out.vecs.push_back(std::move(y));
      }
      return out;
    }
    const int p = std::min(m - 1, nev + (m - nev) / 2);
    std::vector<std::vector<cplx>> kept(p, std::vector<cplx>(dim, 0.0));
    for (int i = 0; i < p; ++i) {
      for (int l = 0; l < m; ++l) axpy(S(l, i), V[l], kept[i]);
    }
    std::vector<cplx> next = std::move(V[m]);
    for (int i = 0; i < p; ++i) V[i] = std::move(kept[i]);
    V[p] = std::move(next);
    for (int i = p + 1; i <= ncv; ++i) V[i].assign(dim, 0.0);
    T.setZero();
    for (int i = 0; i < p; ++i) {
      T(i, i) = theta(i);
      T(p, i) = beta * S(m - 1, i);
      T(i, p) = std::conj(T(p, i));
    }
    j0 = p;
  }
  throw SolverError("Lanczos loop exited unexpectedly");
}

EigenSolution lanczos_solve(const PauliSum& H, int k, const SolverOptions& o) {
  const int n = H.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  const CompiledOperator op(H);
  const double op_scale = std::max(l1_norm(H), 1e-300);
  const int keep = std::max(k, 2);
  EigenSolution sol;
  sol.method = "lanczos";

  RitzPairs found = thick_restart_lanczos(op, dim, keep, {}, o, op_scale, o.seed);
  sol.iterations = found.matvecs;
  // A single Krylov sequence sees one vector per exactly degenerate level;
  // search the complement for missed partners.
  for (int round = 0; round < keep; ++round) {
    const double kth = *std::max_element(found.theta.begin(), found.theta.end());
    const double tol = o.degeneracy_tol * std::max(1.0, std::abs(found.theta[0]));
    RitzPairs extra = thick_restart_lanczos(op, dim, 1, found.vecs, o, op_scale,
                                            o.seed + 1 + round);
    sol.iterations += extra.matvecs;
    if (extra.theta[0] >= kth - tol) break;
    found.theta.push_back(extra.theta[0]);
    found.vecs.push_back(std::move(extra.vecs[0]));
  }
  std::vector<std::size_t> order(found.theta.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return found.theta[a] < found.theta[b];
  });
  for (int i = 0; i < keep && i < static_cast<int>(order.size()); ++i) {
    const std::size_t idx = order[i];
    sol.energies.push_back(found.theta[idx]);
    StateVector v(n);
    v.amp = std::move(found.vecs[idx]);
    v.provenance = "eigenstate(" + std::to_string(i) + ")";
    sol.states.push_back(std::move(v));
  }
  return sol;
}

}  // namespace

double StateVector::norm() const { return std::sqrt(norm_sq(amp)); }

StateVector StateVector::basis(int n, std::uint64_t index) {
  StateVector v(n);
  v.amp.at(index) = 1.0;
  v.provenance = "basis(" + std::to_string(index) + ")";
  return v;
}

void write_state(std::ostream& os, const StateVector& psi) {
  os.write(kMagic, 8);
  const std::uint32_t n = static_cast<std::uint32_t>(psi.n_qubits), reserved = 0;
  unsigned char buf[8];
  for (int b = 0; b < 4; ++b) buf[b] = static_cast<unsigned char>(n >> (8 * b));
  for (int b = 0; b < 4; ++b) buf[4 + b] = static_cast<unsigned char>(reserved >> (8 * b));
  os.write(reinterpret_cast<const char*>(buf), 8);
  for (const cplx& a : psi.amp) {
    for (double v : {a.real(), a.imag()}) {
      std::uint64_t bits;
      std::memcpy(&bits, &v, 8);
      for (int b = 0; b < 8; ++b) buf[b] = static_cast<unsigned char>(bits >> (8 * b));
      os.write(reinterpret_cast<const char*>(buf), 8);
    }
  }
}

StateVector read_state(std::istream& is) {
  char magic[8];
  unsigned char buf[8];
  if (!is.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) {
    throw std::runtime_error("not a state vector file (bad magic)");
  }
  if (!is.read(reinterpret_cast<char*>(buf), 8)) {
    throw std::runtime_error("truncated state vector header");
  }
  std::uint32_t n = 0;
  for (int b = 0; b < 4; ++b) n |= static_cast<std::uint32_t>(buf[b]) << (8 * b);
  if (n > 40) throw std::runtime_error("state vector header: qubit count too large");
  StateVector psi(static_cast<int>(n));
  for (cplx& a : psi.amp) {
    double parts[2];
    for (double& v : parts) {
      if (!is.read(reinterpret_cast<char*>(buf), 8)) {
        throw std::runtime_error("truncated state vector data");
      }
      std::uint64_t bits = 0;
      for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(buf[b]) << (8 * b);
      std::memcpy(&v, &bits, 8);
    }
    a = cplx(parts[0], parts[1]);
  }
  psi.provenance = "file";
  return psi;
}

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw DimensionError("inner product size mismatch");
  const std::size_t d = a.size();
  const std::int64_t chunks = static_cast<std::int64_t>((d + kChunk - 1) / kChunk);
  std::vector<cplx> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    cplx s = 0;
    const std::size_t end = std::min(d, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) s += std::conj(a[i]) * b[i];
    partial[c] = s;
  }
  cplx s = 0;
  for (const cplx& p : partial) s += p;
  return s;
}

double norm_sq(const std::vector<cplx>& a) {
  const std::size_t d = a.size();
  const std::int64_t chunks = static_cast<std::int64_t>((d + kChunk - 1) / kChunk);
  std::vector<double> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    double s = 0;
    const std::size_t end = std::min(d, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) s += std::norm(a[i]);
    partial[c] = s;
  }
  return std::accumulate(partial.begin(), partial.end(), 0.0);
}

CompiledOperator::CompiledOperator(const PauliSum& H) : n_(H.n_qubits()) {
  std::map<std::uint64_t, std::vector<Term>> by_x;
  for (const auto& [p, c] : H.terms()) {
    by_x[p.x].push_back({p.z, i_pow(p.y_count()) * c});
  }
  for (auto& [x, terms] : by_x) groups_.push_back({x, std::move(terms)});
}

void CompiledOperator::apply(const cplx* in, cplx* out) const {
  const std::int64_t d = std::int64_t{1} << n_;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < d; ++i) {
    cplx acc = 0;
    for (const Group& g : groups_) {
      const std::uint64_t j = static_cast<std::uint64_t>(i) ^ g.x;
      cplx f = 0;
      for (const Term& t : g.terms) {
        f += (std::popcount(j & t.z) & 1) ? -t.coef : t.coef;
      }
      acc += f * in[j];
    }
    out[i] = acc;
  }
}

std::vector<cplx> CompiledOperator::apply(const std::vector<cplx>& in) const {
  if (in.size() != (std::size_t{1} << n_)) {
    throw DimensionError("vector length does not match operator");
  }
  std::vector<cplx> out(in.size());
  apply(in.data(), out.data());
  return out;
}

StateVector apply(const PauliSum& H, const StateVector& psi) {
  check_dims(H, psi);
  StateVector out(psi.n_qubits);
  out.amp = CompiledOperator(H).apply(psi.amp);
  out.normalized = false;
  out.provenance = "apply";
  return out;
}

EigenSolution ground_state(const PauliSum& H, int k, const SolverOptions& o) {
  const int n = H.n_qubits();
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < 1) throw DimensionError("operator on zero qubits");
  if (n > o.max_qubits) {
    throw DimensionError("refusing to diagonalize " + std::to_string(n) +
                         " qubits (limit " + std::to_string(o.max_qubits) + ")");
  }
  const bool dense =
      o.force_dense || (!o.force_lanczos && n <= o.dense_max_qubits) || n <= 4;
  if (dense && n > 14) throw DimensionError("dense solver limited to 14 qubits");
  EigenSolution sol = dense ? dense_solve(H, k) : lanczos_solve(H, k, o);
  const CompiledOperator op(H);
  for (std::size_t i = 0; i < sol.states.size(); ++i) {
    std::vector<cplx> r = op.apply(sol.states[i].amp);
    axpy(-sol.energies[i], sol.states[i].amp, r);
    sol.max_residual = std::max(sol.max_residual, std::sqrt(norm_sq(r)));
  }
  const double scale_ref = std::max(1.0, l1_norm(H));
  if (sol.max_residual > 1e-8 * scale_ref) {
    throw SolverError("eigenpair residual " + std::to_string(sol.max_residual) +
                      " exceeds 1e-8 * operator scale");
  }
  if (sol.energies.size() >= 2) {
    sol.gap = sol.energies[1] - sol.energies[0];
    sol.degenerate =
        sol.gap < o.degeneracy_tol * std::max(1.0, std::abs(sol.energies[0]));
  }
  sol.energies.resize(std::min<std::size_t>(sol.energies.size(), std::max(k, 2)));
  return sol;
}

double expectation(const PauliSum& A, const StateVector& psi) {
  check_dims(A, psi);
  const std::vector<cplx> a = CompiledOperator(A).apply(psi.amp);
  const cplx e = inner(psi.amp, a);
  if (std::abs(e.imag()) > 1e-10 * std::max(1.0, std::abs(e.real()))) {
    throw std::domain_error("expectation has an imaginary part; operator not Hermitian?");
  }
  return e.real();
}

namespace {

double clamp_variance(double v, double m2) {
  if (v >= 0) return v;
  if (v >= -1e-9 * std::max(1.0, m2)) return 0.0;
  throw std::domain_error("negative variance " + std::to_string(v));
}

}  // namespace

double variance(const PauliSum& A, const StateVector& psi) {
  check_dims(A, psi);
  const std::vector<cplx> a = CompiledOperator(A).apply(psi.amp);
  const double m = inner(psi.amp, a).real();
  const double m2 = norm_sq(a);
  return clamp_variance(m2 - m * m, m2);
}

double covariance_sym(const PauliSum& A, const PauliSum& B,
                      const StateVector& psi) {
  check_dims(A, psi);
  check_dims(B, psi);
  const std::vector<cplx> a = CompiledOperator(A).apply(psi.amp);
  const std::vector<cplx> b = CompiledOperator(B).apply(psi.amp);
  const double ma = inner(psi.amp, a).real(), mb = inner(psi.amp, b).real();
  return inner(a, b).real() - ma * mb;
}

cplx commutator_expectation(const PauliSum& A, const PauliSum& B,
                            const StateVector& psi) {
  check_dims(A, psi);
  check_dims(B, psi);
  const std::vector<cplx> a = CompiledOperator(A).apply(psi.amp);
  const std::vector<cplx> b = CompiledOperator(B).apply(psi.amp);
  const cplx ab = inner(a, b);
  return ab - std::conj(ab);
}

double correlation(const PauliSum& A, const PauliSum& B, const StateVector& psi) {
  const double va = variance(A, psi), vb = variance(B, psi);
  if (va <= 1e-12 || vb <= 1e-12) {
    throw UndefinedCorrelation("correlation undefined: a variance is zero");
  }
  const double r = covariance_sym(A, B, psi) / std::sqrt(va * vb);
  return std::clamp(r, -1.0, 1.0);
}

MomentStats moment_stats(const PauliSum& A, const StateVector& psi,
                         std::string label) {
  check_dims(A, psi);
  const std::vector<cplx> a = CompiledOperator(A).apply(psi.amp);
  MomentStats s;
  s.mean = inner(psi.amp, a).real();
  s.second_moment = norm_sq(a);
  s.variance = clamp_variance(s.second_moment - s.mean * s.mean, s.second_moment);
  s.frob_sq_over_d = frobenius_norm_sq_over_d(A);
  s.identity_coeff = A.identity_coefficient();
  s.label = std::move(label);
  return s;
}

std::vector<MomentStats> moment_stats(const Partitioning& parts,
                                      const StateVector& psi) {
  std::vector<MomentStats> out;
  for (std::size_t b = 0; b < parts.parts.size(); ++b) {
    out.push_back(moment_stats(parts.parts[b], psi,
                               parts.label + "[" + std::to_string(b) + "]"));
  }
  return out;
}

}  // namespace latshot
