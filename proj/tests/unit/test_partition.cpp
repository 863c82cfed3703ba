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

#include "latshot/lattice.hpp"
#include "latshot/models.hpp"
#include "latshot/partition.hpp"

namespace latshot {
namespace {

int count_weight(const PauliSum& s, int w) {
  int c = 0;
  for (const auto& [p, coef] : s.terms()) c += p.weight() == w;
  return c;
}

TEST(PartitionSpec, LabelRoundTrip) {
  for (const auto& s : {PartitionSpec::pauli(), PartitionSpec::geo1d(2),
                        PartitionSpec::geo2d(2, 2), PartitionSpec::two_local(),
                        PartitionSpec::whole()}) {
    EXPECT_EQ(PartitionSpec::parse(s.label()), s);
  }
  EXPECT_EQ(PartitionSpec::geo1d(2).label(), "geo1d_L2");
  EXPECT_THROW(PartitionSpec::parse("geo1d_Lx"), std::invalid_argument);
}

TEST(PauliBaseline, GroupCounts) {
  const auto lat = build_lattice(2, 3);
  const auto tfim = build_tfim(lat, 1, 1);
  const auto p1 = pauli_baseline(tfim);
  EXPECT_EQ(p1.size(), 2u);
  EXPECT_TRUE(validate_partition(p1, tfim.pauli()).ok());

  const auto xy = build_tfxym(lat, 0.3, 1);
  const auto p2 = pauli_baseline(xy);
  EXPECT_EQ(p2.size(), 3u);
  const auto rep = validate_partition(p2, xy.pauli());
  EXPECT_TRUE(rep.commutation_violations.empty());
  EXPECT_TRUE(rep.ok());

  const auto hub = build_spinless_hubbard(lat, 1, 1, 0);
  const auto p3 = pauli_baseline(hub);
  EXPECT_EQ(p3.size(), 5u);
  EXPECT_TRUE(validate_partition(p3, hub.pauli()).ok());
}

TEST(PauliBaseline, GreedyWithoutHint) {
  PauliSum s(2);
  s.add("XX", 1.0);
  s.add("ZZ", 0.5);
  s.add("XI", 0.2);
  s.add("ZI", 0.1);
  const auto p = pauli_baseline(s);
  EXPECT_TRUE(validate_partition(p, s).ok());
  // {XX, ZZ}, then XI and ZI each anticommute with every earlier group.
  EXPECT_EQ(p.size(), 3u);
}

TEST(CutPair, Geo1DWidthTwoOn4x6) {
  const auto H = build_tfim(build_lattice(4, 6), 1, 1);
  const auto cut = make_cut_pair(H, PartitionSpec::geo1d(2));
  EXPECT_EQ(cut.h_cut.size(), 12u);
  EXPECT_EQ(cut.h_cut_prime.size(), 12u);
  EXPECT_EQ(count_weight(cut.h_cut, 2), 12);
}

TEST(CutPair, Geo1DWidthOneSplitsDirections) {
  const auto lat = build_lattice(4, 6);
  const auto H = build_tfim(lat, 1, 1);
  const auto cut = make_cut_pair(H, PartitionSpec::geo1d(1));
  EXPECT_EQ(cut.h_cut.size(), 24u);
  EXPECT_EQ(cut.h_cut_prime.size(), 24u);
  // The two families are the x bonds and the y bonds.
  for (const auto* fam : {&cut.h_cut, &cut.h_cut_prime}) {
    int dx = 0;
    for (const auto& [p, c] : fam->terms()) {
      std::vector<int> q;
      for (int k = 0; k < p.n_qubits; ++k) {
        if ((p.support() >> k) & 1) q.push_back(k);
      }
      ASSERT_EQ(q.size(), 2u);
      dx += lat.iy(q[0]) == lat.iy(q[1]);
    }
    EXPECT_TRUE(dx == 0 || dx == 24);
  }
}

TEST(CutPair, Geo2DBothSeams) {
  const auto H = build_tfim(build_lattice(4, 6), 1, 1);
  const auto cut = make_cut_pair(H, PartitionSpec::geo2d(2, 2));
  EXPECT_EQ(cut.h_cut.size(), 24u);
  EXPECT_EQ(cut.h_cut_prime.size(), 24u);
}

TEST(CutPair, DefinesTheParts) {
  const auto H = build_tfim(build_lattice(4, 6), 0.7, 1.1);
  for (const auto& spec : {PartitionSpec::geo1d(1), PartitionSpec::geo1d(2),
                           PartitionSpec::geo2d(2, 2)}) {
    const auto p = geometric_partition(H, spec);
    ASSERT_EQ(p.size(), 2u);
    const auto cut = make_cut_pair(H, spec);
    const PauliSum h = H.pauli();
    const auto h1 = 0.5 * sum_combine(h - cut.h_cut, cut.h_cut_prime, 1, 1);
    const auto h2 = 0.5 * sum_combine(h + cut.h_cut, cut.h_cut_prime, 1, -1);
    EXPECT_LT(max_coefficient_residual(p.parts[0], h1), 1e-12) << spec.label();
    EXPECT_LT(max_coefficient_residual(p.parts[1], h2), 1e-12) << spec.label();
    EXPECT_LT(max_coefficient_residual(h1 + h2, h), 1e-12);
  }
}

TEST(GeometricPartition, StripPatches) {
  const auto H = build_tfim(build_lattice(4, 6), 1, 1);
  const auto p = geometric_partition(H, PartitionSpec::geo1d(2));
  ASSERT_EQ(p.size(), 2u);
  for (const auto& part_patches : p.patches) {
    ASSERT_EQ(part_patches.size(), 2u);
    for (const auto& patch : part_patches) EXPECT_EQ(patch.size(), 12u);
  }
  EXPECT_TRUE(validate_partition(p, H.pauli()).ok());
}

TEST(GeometricPartition, TwoLocalOn4x4) {
  const double h = 0.8;
  const auto H = build_tfim(build_lattice(4, 4), 1, h);
  const auto p = geometric_partition(H, PartitionSpec::two_local());
  ASSERT_EQ(p.size(), 4u);
  for (const auto& part : p.parts) {
    EXPECT_EQ(count_weight(part, 2), 8);
    EXPECT_EQ(count_weight(part, 1), 16);
    for (const auto& [s, c] : part.terms()) {
      if (s.weight() == 1) {
        EXPECT_DOUBLE_EQ(c, -h / 4);
      }
    }
  }
  EXPECT_TRUE(validate_partition(p, H.pauli()).ok());
}

TEST(GeometricPartition, SumsToHamiltonianForEveryKind) {
  const auto lat = build_lattice(4, 6);
  const auto H = build_tfim(lat, 1, 1);
  for (const auto& spec :
       {PartitionSpec::geo1d(1), PartitionSpec::geo1d(2), PartitionSpec::geo2d(2, 2),
        PartitionSpec::two_local()}) {
    const auto rep = validate_partition(geometric_partition(H, spec), H.pauli());
    EXPECT_TRUE(rep.ok()) << spec.label() << " residual " << rep.residual;
  }
}

TEST(GeometricPartition, Bnnni) {
  const auto H = build_bnnni(build_lattice(6, 6), 1, 0.5, 1);
  const auto p = geometric_partition(H, PartitionSpec::geo1d(3));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(validate_partition(p, H.pauli()).ok());
  EXPECT_THROW(geometric_partition(H, PartitionSpec::geo1d(2)), PartitionError);
}

TEST(GeometricPartition, FermionicSiteSupport) {
  const auto H = build_spinless_hubbard(build_lattice(4, 2), 1, 1, 0.2);
  const auto p = geometric_partition(H, PartitionSpec::geo1d(2));
  EXPECT_TRUE(validate_partition(p, H.pauli()).ok());
}

TEST(GeometricPartition, RejectsIncompatibleShapes) {
  const auto H = build_tfim(build_lattice(3, 3), 1, 1);
  EXPECT_THROW(geometric_partition(H, PartitionSpec::geo1d(2)), PartitionError);
  EXPECT_THROW(geometric_partition(H, PartitionSpec::two_local()), PartitionError);
}

TEST(ValidatePartition, CatchesCorruption) {
  const auto H = build_tfim(build_lattice(4, 3), 1, 1);
  auto p = geometric_partition(H, PartitionSpec::geo1d(1));

  auto bad_coef = p;
  bad_coef.parts[0].add(bad_coef.parts[0].terms().begin()->first, 0.25);
  EXPECT_NEAR(validate_partition(bad_coef, H.pauli()).residual, 0.25, 1e-12);

  auto swapped = p;
  std::swap(swapped.parts[0], swapped.parts[1]);
  const auto rep = validate_partition(swapped, H.pauli());
  EXPECT_LT(rep.residual, 1e-12);
  EXPECT_FALSE(rep.patch_violations.empty());

  auto merged = pauli_baseline(H);
  merged.parts[0] += merged.parts[1];
  merged.parts.pop_back();
  EXPECT_FALSE(validate_partition(merged, H.pauli()).commutation_violations.empty());
}

}  // namespace
}  // namespace latshot
