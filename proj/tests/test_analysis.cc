// Copyright 2026 The Authors.
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


#include <random>

#include "doctest.h"
#include "oracles.h"
#include "spikelab/analysis.h"
#include "spikelab/catalog.h"
#include "spikelab/transforms.h"

using namespace spikelab;

TEST_CASE("connectivity") {
  CHECK(IsThreeConnected(Uniform(2, 6)));
  CHECK_FALSE(IsThreeConnected(DirectSum(Uniform(1, 3), Uniform(1, 3))));
  CHECK_FALSE(IsConnected(DirectSum(Uniform(1, 3), Uniform(1, 3))));
  // No 2-separation can exist on three elements.
  CHECK(IsThreeConnected(Uniform(1, 3)));
  for (const char* name : {"O7", "O7-", "P7-", "P7=", "AG23e", "P8", "MW4", "W4"}) {
    CAPTURE(name);
    CHECK(IsThreeConnected(Named(name)));
  }
  CHECK(IsThreeConnected(Uniform(2, 6)));

  for (int n = 1; n <= 5; ++n) {
    for (const Matroid& m : oracle::AllLabeledMatroids(n)) {
      for (int k = 2; k <= 3; ++k) CHECK(IsKConnected(m, k) == oracle::KConnectedBrute(m, k));
    }
  }
}

TEST_CASE("separations carry a witness") {
  const Matroid m = DirectSum(Uniform(2, 4), Uniform(1, 2));
  const auto sep = FindSeparation(m, 1);
  REQUIRE(sep.has_value());
  CHECK(Connectivity(m, *sep) == 0);
  CHECK_FALSE(FindSeparation(Uniform(2, 6), 2).has_value());
}

TEST_CASE("isomorphism") {
  CHECK(AreIsomorphic(Uniform(2, 4), Dual(Uniform(2, 4))));
  CHECK(AreIsomorphic(Wheel(4), Dual(Wheel(4))));
  CHECK_FALSE(AreIsomorphic(Named("P7"), Named("P7-")));

  const Matroid p8 = Named("P8");
  const auto map = FindIsomorphism(p8, Dual(p8));
  REQUIRE(map.has_value());
  const Matroid d = Dual(p8);
  ForEachSubset(p8.ground(), [&](ElementSet s) {
    CHECK(p8.rank(s) == d.rank(ElementSet(oracle::Permute(s.bits(), *map))));
  });
}

TEST_CASE("canonical form matches the permutation oracle") {
  // Random relabelings share a form; distinct classes never do.
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 5; ++n) {
    const auto classes = oracle::DedupeByIsomorphism(oracle::AllLabeledMatroids(n));
    std::set<CanonicalForm> forms;
    for (const Matroid& m : classes) {
      const CanonicalForm f = ComputeCanonicalForm(m);
      forms.insert(f);
      CHECK(oracle::Isomorphic(FromCanonicalForm(f), m));
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      std::vector<uint8_t> table(size_t{1} << n);
      for (uint32_t s = 0; s < table.size(); ++s) table[oracle::Permute(s, p)] = m.RankOf(s);
      CHECK(ComputeCanonicalForm(Matroid::FromRankTable(n, table)) == f);
    }
    CHECK(forms.size() == classes.size());
  }
}

TEST_CASE("triangles, triads and removable elements") {
  CHECK(Triangles(Uniform(2, 4)).size() == 4);
  CHECK(Triads(Uniform(2, 4)).size() == 4);
  CHECK(Triads(Uniform(2, 5)).empty());
  CHECK(Triangles(Named("F7")).size() == 7);

  const RemovableSets wheel = Removable(Wheel(4));
  CHECK(wheel.deletable.empty());
  CHECK(wheel.contractible.empty());
  const RemovableSets u26 = Removable(Uniform(2, 6));
  CHECK(u26.deletable == Uniform(2, 6).ground());
  const RemovableSets p8 = Removable(Named("P8"));
  CHECK(p8.deletable == Named("P8").ground());
  CHECK(p8.contractible == Named("P8").ground());
}
