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

#include <random>

#include "latshot/oracle/dense.hpp"
#include "latshot/pauli.hpp"
#include "test_util.hpp"

namespace latshot {
namespace {

using oracle::dense_matrix;
using oracle::kron_string;

TEST(PauliString, ParseAndPrintRoundTrip) {
  const auto p = PauliString::parse("XIYZ");
  EXPECT_EQ(p.n_qubits, 4);
  EXPECT_EQ(p.op_at(0), 'X');
  EXPECT_EQ(p.op_at(1), 'I');
  EXPECT_EQ(p.op_at(2), 'Y');
  EXPECT_EQ(p.op_at(3), 'Z');
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(p.y_count(), 1);
  EXPECT_EQ(p.str(), "XIYZ");
  EXPECT_THROW(PauliString::parse("XQ"), std::invalid_argument);
}

TEST(PauliString, SingleQubitProducts) {
  const auto X = PauliString::parse("X");
  const auto Y = PauliString::parse("Y");
  const auto Z = PauliString::parse("Z");
  auto xz = pauli_mul(X, Z);
  EXPECT_EQ(xz.product, Y);
  EXPECT_EQ(xz.phase(), std::complex<double>(0, -1));
  auto zz = pauli_mul(Z, Z);
  EXPECT_TRUE(zz.product.is_identity());
  EXPECT_EQ(zz.phase(), std::complex<double>(1, 0));
  auto xy = pauli_mul(X, Y);
  EXPECT_EQ(xy.product, Z);
  EXPECT_EQ(xy.phase(), std::complex<double>(0, 1));
}

TEST(PauliString, ProductMatchesDenseOracle) {
  auto check = [](const std::string& a, const std::string& b) {
    const auto r = pauli_mul(PauliString::parse(a), PauliString::parse(b));
    const Eigen::MatrixXcd lhs = kron_string(a) * kron_string(b);
    const Eigen::MatrixXcd rhs = r.phase() * kron_string(r.product.str());
    EXPECT_LT((lhs - rhs).norm(), 1e-12) << a << " * " << b;
  };
  check("XX", "ZZ");
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    check(testing::random_pauli_text(4, rng), testing::random_pauli_text(4, rng));
  }
}

TEST(PauliString, XXTimesZZIsMinusYY) {
  const auto r = pauli_mul(PauliString::parse("XX"), PauliString::parse("ZZ"));
  EXPECT_EQ(r.product.str(), "YY");
  EXPECT_EQ(r.phase(), std::complex<double>(-1, 0));
}

TEST(PauliString, Commutation) {
  EXPECT_TRUE(commutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
  EXPECT_FALSE(commutes(PauliString::parse("XI"), PauliString::parse("ZI")));
  EXPECT_FALSE(qubitwise_commutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
  EXPECT_TRUE(qubitwise_commutes(PauliString::parse("XI"), PauliString::parse("XZ")));
}

TEST(PauliString, CommutationMatchesDenseCommutator) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const auto a = testing::random_pauli_text(6, rng);
    const auto b = testing::random_pauli_text(6, rng);
    const Eigen::MatrixXcd A = kron_string(a), B = kron_string(b);
    const bool dense = (A * B - B * A).norm() < 1e-9;
    EXPECT_EQ(commutes(PauliString::parse(a), PauliString::parse(b)), dense)
        << a << " " << b;
  }
}

TEST(PauliSum, ArithmeticCancelsAndPrunes) {
  std::mt19937_64 rng(3);
  const auto a = testing::random_sum(5, 12, rng);
  EXPECT_TRUE(sum_combine(a, a, 1.0, -1.0).empty());
  EXPECT_TRUE((a + (-1.0) * a).empty());
  PauliSum b(2);
  b.add("ZZ", 1.0);
  b.add("ZZ", -1.0 + 1e-16);
  EXPECT_TRUE(b.empty());
}

TEST(PauliSum, TracelessPart) {
  PauliSum s(1);
  s.add("I", 3.0);
  s.add("Z", 2.0);
  PauliSum want(1);
  want.add("Z", 2.0);
  EXPECT_EQ(traceless_part(s), want);
  EXPECT_EQ(traceless_part(want), want);

  std::mt19937_64 rng(5);
  const auto r = testing::random_sum(4, 10, rng);
  EXPECT_NEAR(std::abs(dense_matrix(traceless_part(r)).trace()), 0.0, 1e-12);
}

TEST(PauliSum, FrobeniusNorm) {
  PauliSum s(3);
  s.add("ZZI", 2.0);
  s.add("XII", 3.0);
  EXPECT_DOUBLE_EQ(frobenius_norm_sq_over_d(s), 13.0);
  PauliSum id(2);
  id.add("II", 5.0);
  EXPECT_DOUBLE_EQ(frobenius_norm_sq_over_d(id), 0.0);

  std::mt19937_64 rng(9);
  const auto r = testing::random_sum(4, 15, rng);
  EXPECT_NEAR(frobenius_norm_sq_over_d(r),
              oracle::dense_frobenius_sq_over_d(dense_matrix(r)), 1e-10);
}

TEST(PauliSum, HermitianProductMatchesDense) {
  std::mt19937_64 rng(13);
  const auto a = testing::random_sum(4, 8, rng);
  const Eigen::MatrixXcd A = dense_matrix(a);
  EXPECT_LT((dense_matrix(a.hermitian_product(a)) - A * A).norm(), 1e-10);

  PauliSum x(1), z(1);
  x.add("X", 1.0);
  z.add("Z", 1.0);
  EXPECT_THROW(x.hermitian_product(z), std::domain_error);
}

TEST(PauliSum, TextRoundTrip) {
  std::mt19937_64 rng(17);
  const auto a = testing::random_sum(6, 20, rng);
  EXPECT_EQ(PauliSum::from_text(a.to_text()), a);
}

TEST(PauliSum, DimensionMismatch) {
  PauliSum a(2), b(3);
  a.add("XX", 1.0);
  b.add("XXX", 1.0);
  EXPECT_THROW(a += b, DimensionError);
  EXPECT_THROW(a.add("X", 1.0), DimensionError);
}

TEST(PauliSum, RealMatrixDetection) {
  PauliSum a(2);
  a.add("YY", 1.0);
  a.add("XZ", 1.0);
  EXPECT_TRUE(is_real_matrix(a));
  a.add("YI", 1.0);
  EXPECT_FALSE(is_real_matrix(a));
}

}  // namespace
}  // namespace latshot
