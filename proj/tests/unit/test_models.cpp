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


#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <set>
#include <utility>

#include "latshot/lattice.hpp"
#include "latshot/models.hpp"
#include "latshot/oracle/dense.hpp"
#include "latshot/oracle/fock.hpp"
#include "latshot/spectral.hpp"

namespace latshot {
namespace {

using oracle::dense_matrix;

int count_role(const LatticeHamiltonian& H, TermRole role) {
  int c = 0;
  for (const auto& t : H.terms) c += t.role == role;
  return c;
}

double lowest(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues()(0);
}

double lowest(const PauliSum& H) {
  return oracle::dense_spectrum(H).energies(0);
}

TEST(Lattice, EdgeCounts) {
  const auto l33 = build_lattice(3, 3);
  EXPECT_EQ(l33.n_sites(), 9);
  EXPECT_EQ(l33.nn_edges().size(), 18u);
  EXPECT_EQ(l33.nnn_axial_edges().size(), 18u);
  const auto l46 = build_lattice(4, 6);
  EXPECT_EQ(l46.n_sites(), 24);
  EXPECT_EQ(l46.nn_edges().size(), 48u);
  EXPECT_EQ(l46.nnn_axial_edges().size(), 48u);
  // Extent-2 periodic directions would double every bond; they are merged.
  EXPECT_EQ(build_lattice(2, 2).nn_edges().size(), 4u);
  EXPECT_EQ(build_lattice(4, 3, 1, false).nn_edges().size(), 3u * 3 + 4u * 2);
}

TEST(Lattice, EdgesAreDistinctPairs) {
  const auto lat = build_lattice(4, 3);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : lat.nn_edges()) {
    EXPECT_NE(e.a, e.b);
    EXPECT_TRUE(seen.insert(std::minmax(e.a, e.b)).second);
  }
}

TEST(Lattice, Indexing) {
  const auto lat = build_lattice(4, 3, 2);
  EXPECT_EQ(lat.n_qubits(), 24);
  EXPECT_EQ(lat.site_index(1, 2), 9);
  EXPECT_EQ(lat.site_index(1, 2, 1), 21);
  EXPECT_EQ(lat.ix(9), 1);
  EXPECT_EQ(lat.iy(9), 2);
  EXPECT_THROW(lat.site_index(4, 0), std::out_of_range);
  EXPECT_THROW(build_lattice(1, 3), std::invalid_argument);
  EXPECT_THROW(build_lattice(3, 3, 3), std::invalid_argument);
  EXPECT_THROW(build_lattice(9, 8), std::invalid_argument);
}

TEST(Lattice, Chain) {
  const auto ring = build_chain(10);
  EXPECT_EQ(ring.n_sites(), 10);
  EXPECT_EQ(ring.nn_edges().size(), 10u);
  for (const auto& e : ring.nn_edges()) EXPECT_EQ(e.dir, Direction::kX);
  EXPECT_EQ(build_chain(10, false).nn_edges().size(), 9u);
}

TEST(ModelConfig, Validation) {
  ModelConfig c;
  c.kind = ModelKind::kTFIM;
  c.J = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);  // h missing
  c.h = 1;
  EXPECT_NO_THROW(c.validate());
  c.eta = 0.5;
  EXPECT_THROW(c.validate(), std::invalid_argument);  // not a TFIM coupling
  EXPECT_EQ(parse_model_kind("spinless_hubbard"), ModelKind::kSpinlessHubbard);
  EXPECT_THROW(parse_model_kind("potts"), std::invalid_argument);
}

TEST(Tfxym, TermCountsAndCoefficients) {
  const auto lat = build_lattice(3, 3);
  const auto H = build_tfxym(lat, 0.5, 1.0).pauli();
  EXPECT_EQ(H.size(), 45u);  // 18 bonds x {XX, YY} + 9 fields
  const auto iso = build_tfxym(lat, 1.0, 0.7).pauli();
  for (const auto& [p, c] : iso.terms()) {
    EXPECT_EQ(p.y_count(), 0);
    if (p.weight() == 2) {
      EXPECT_DOUBLE_EQ(c, -1.0);
    }
  }
}

TEST(Tfxym, IsotropicPointIsHardcoreBosons) {
  const auto lat = build_lattice(3, 3);
  const double h = 0.8;
  const auto xy = build_tfxym(lat, 0.0, h).pauli();
  const auto hcbh = build_hcbh(lat, 1.0, -2.0 * h).pauli();
  EXPECT_LT(max_coefficient_residual(xy, hcbh), 1e-15);
}

TEST(Tfim, ClassicalAndFieldLimits) {
  const auto lat = build_lattice(3, 3);
  EXPECT_NEAR(lowest(build_tfim(lat, 0.0, 1.3).pauli()), -1.3 * 9, 1e-10);
  EXPECT_NEAR(lowest(build_tfim(lat, 0.9, 0.0).pauli()), -0.9 * 18, 1e-10);
}

TEST(Tfim, GroundEnergy3x3) {
  // Reference value from an independent numpy diagonalization.
  const auto H = build_tfim(build_lattice(3, 3), 1.0, 1.0).pauli();
  const double e0 = lowest(H);
  EXPECT_NEAR(e0, -19.131366809074, 1e-9);
  EXPECT_NEAR(ground_state(H).energies[0], e0, 1e-9);
}

TEST(Bnnni, ReducesToTfimAndCountsTerms) {
  const auto lat = build_lattice(4, 6);
  const auto b0 = build_bnnni(lat, 1.0, 0.0, 0.5).pauli();
  EXPECT_EQ(b0, build_tfim(lat, 1.0, 0.5).pauli());
  const auto H = build_bnnni(lat, 1.0, 0.4, 0.5);
  EXPECT_EQ(count_role(H, TermRole::kBond), 48);
  EXPECT_EQ(count_role(H, TermRole::kNnnBond), 48);
  EXPECT_EQ(count_role(H, TermRole::kField), 24);
  EXPECT_THROW(build_bnnni(build_lattice(2, 3), 1, 0.5, 1), std::invalid_argument);
}

TEST(Hcbh, ZeroBosonGroundState) {
  // With +(h/2) sum Z the empty state has every Z = -1, i.e. index 2^n - 1.
  const auto H = build_hcbh(build_lattice(2, 3), 0.2, 1.0).pauli();
  const auto sol = ground_state(H);
  EXPECT_NEAR(std::norm(sol.states[0].amp.back()), 1.0, 1e-10);
  const auto Jzero = build_hcbh(build_lattice(2, 3), 0.0, 1.0).pauli();
  for (const auto& [p, c] : Jzero.terms()) EXPECT_EQ(p.x, 0u);
}

TEST(JordanWigner, Identities) {
  PauliSum n0(3);
  n0.add("III", 0.5);
  n0.add("ZII", -0.5);
  EXPECT_EQ(jordan_wigner({FermionTerm::Kind::kNumber, 0, 0}, 3), n0);

  PauliSum hop01(2);
  hop01.add("XX", 0.5);
  hop01.add("YY", 0.5);
  EXPECT_EQ(jordan_wigner({FermionTerm::Kind::kHopping, 0, 1}, 2), hop01);

  PauliSum hop02(3);
  hop02.add("XZX", 0.5);
  hop02.add("YZY", 0.5);
  EXPECT_EQ(jordan_wigner({FermionTerm::Kind::kHopping, 0, 2}, 3), hop02);
}

TEST(JordanWigner, MatchesFockOracle) {
  const int n = 4;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      const Eigen::MatrixXcd pauli =
          dense_matrix(jordan_wigner({FermionTerm::Kind::kHopping, p, q}, n));
      const Eigen::MatrixXd fock = oracle::fock_hopping(n, p, q);
      EXPECT_LT((pauli - fock.cast<std::complex<double>>()).norm(), 1e-12);
    }
    const Eigen::MatrixXcd num =
        dense_matrix(jordan_wigner({FermionTerm::Kind::kNumber, p, p}, n));
    EXPECT_LT((num - oracle::fock_number(n, p).cast<std::complex<double>>()).norm(),
              1e-12);
  }
}

TEST(SpinlessHubbard, MatchesFockOracle) {
  const auto lat = build_lattice(2, 3);
  const auto H = build_spinless_hubbard(lat, 1.0, 1.5, 0.3).pauli();
  const Eigen::MatrixXd fock = oracle::fock_spinless_hubbard(lat, 1.0, 1.5, 0.3);
  EXPECT_LT((dense_matrix(H) - fock.cast<std::complex<double>>()).norm(), 1e-11);
  const auto diag = build_spinless_hubbard(lat, 0.0, 1.0, 0.2).pauli();
  for (const auto& [p, c] : diag.terms()) EXPECT_EQ(p.x, 0u);
}

TEST(Hubbard, FreeLimitIsTwoSpinlessCopies) {
  const auto lat2 = build_lattice(2, 2, 2);
  const auto lat1 = build_lattice(2, 2, 1);
  // Free fermions: fill every negative single-particle level.
  Eigen::MatrixXd hop = Eigen::MatrixXd::Zero(4, 4);
  for (const auto& e : lat1.nn_edges()) {
    hop(e.a, e.b) -= 1.0;
    hop(e.b, e.a) -= 1.0;
  }
  const Eigen::VectorXd levels =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(hop).eigenvalues();
  double free = 0;
  for (int k = 0; k < levels.size(); ++k) free += std::min(levels(k), 0.0);
  const double e0 = lowest(build_hubbard(lat2, 1.0, 0.0, 0.0).pauli());
  EXPECT_NEAR(e0, 2 * free, 1e-10);
  EXPECT_NEAR(e0, lowest(oracle::fock_hubbard(lat2, 1.0, 0.0, 0.0)), 1e-10);
}

TEST(Hubbard, MatchesFockOracleWithInteraction) {
  const auto lat = build_lattice(2, 2, 2);
  const auto H = build_hubbard(lat, 1.0, 4.0, 0.5).pauli();
  const Eigen::MatrixXd fock = oracle::fock_hubbard(lat, 1.0, 4.0, 0.5);
  EXPECT_LT((dense_matrix(H) - fock.cast<std::complex<double>>()).norm(), 1e-11);
}

TEST(Hubbard, AtomicLimit) {
  const auto lat = build_lattice(2, 2, 2);
  const auto H = build_hubbard(lat, 0.0, 2.0, 0.0).pauli();
  EXPECT_NEAR(lowest(H), 0.0, 1e-12);
  EXPECT_THROW(build_hubbard(build_lattice(2, 2), 1, 1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace latshot
