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


#include "doctest.h"
#include "oracles.h"
#include "spikelab/analysis.h"
#include "spikelab/catalog.h"
#include "spikelab/minors.h"
#include "spikelab/representability.h"
#include "spikelab/transforms.h"

using namespace spikelab;

namespace {

// The witness must reproduce the pattern under its element map.
void CheckWitness(const Matroid& host, const Matroid& pattern, const MinorWitness& w) {
  const Matroid minor = Minor(host, w.contracted, w.deleted).first;
  REQUIRE(w.element_map.size() == static_cast<size_t>(pattern.size()));
  std::vector<int> position(host.size(), -1);
  int next = 0;
  for (int e = 0; e < host.size(); ++e) {
    if (!w.contracted.contains(e) && !w.deleted.contains(e)) position[e] = next++;
  }
  ForEachSubset(pattern.ground(), [&](ElementSet s) {
    uint32_t image = 0;
    for (int e : s.elements()) image |= uint32_t{1} << position[w.element_map[e]];
    CHECK(minor.RankOf(image) == pattern.rank(s));
  });
}

std::vector<Matroid> SmallClasses(int max_n) {
  std::vector<Matroid> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const Matroid& m : oracle::DedupeByIsomorphism(oracle::AllLabeledMatroids(n))) {
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("has minor") {
  const Matroid p8 = Named("P8");
  // P7 sits in P8 as a single contraction.
  const auto w = HasMinor(p8, Named("P7"));
  REQUIRE(w.has_value());
  CHECK(w->contracted.size() == 1);
  CHECK(w->deleted.empty());
  CheckWitness(p8, Named("P7"), *w);
  const auto wd = HasMinor(p8, Dual(Named("P7")));
  REQUIRE(wd.has_value());
  CHECK(wd->contracted.empty());
  CHECK(wd->deleted.size() == 1);

  const auto u26 = HasMinor(Uniform(3, 7), Uniform(2, 6));
  REQUIRE(u26.has_value());
  CHECK(u26->contracted.size() == 1);
  CheckWitness(Uniform(3, 7), Uniform(2, 6), *u26);
  CHECK_FALSE(HasMinor(Uniform(2, 4), Uniform(2, 5)).has_value());
  CHECK(HasMinor(Named("P8"), Named("P8")).has_value());
}

TEST_CASE("has minor agrees with the brute-force oracle") {
  const std::vector<Matroid> patterns = SmallClasses(4);
  for (const Matroid& host : {Uniform(2, 5), Named("P7") , Wheel(3), Named("F7"),
                              MultiParallelUniform(2, 4, {2}), DirectSum(Uniform(1, 3), Uniform(1, 2))}) {
    if (host.size() > 6) {
      // Seven-element hosts: patterns with at most three elements.
      for (const Matroid& p : patterns) {
        if (p.size() > 3) continue;
        const auto w = HasMinor(host, p);
        CHECK(w.has_value() == oracle::HasMinorBrute(host, p));
        if (w) CheckWitness(host, p, *w);
      }
      continue;
    }
    for (const Matroid& p : patterns) {
      const auto w = HasMinor(host, p);
      CHECK(w.has_value() == oracle::HasMinorBrute(host, p));
      if (w) CheckWitness(host, p, *w);
    }
  }
}

TEST_CASE("all minors") {
  // Up to isomorphism U_{2,3} has six minors: U_{2,3}, U_{1,2}, U_{2,2}, U_{0,1},
  // U_{1,1} and the empty matroid.
  CHECK(AllMinors(Uniform(2, 3)).size() == 6);
  CHECK(oracle::AllMinorsBrute(Uniform(2, 3)).size() == 6);

  for (const Matroid& m : {Uniform(2, 4), Wheel(3), DirectSum(Uniform(1, 2), Uniform(1, 3)),
                           MultiParallelUniform(2, 3, {2})}) {
    std::set<CanonicalForm> expected;
    for (const Matroid& x : oracle::AllMinorsBrute(m)) expected.insert(ComputeCanonicalForm(x));
    const auto got = AllMinors(m);
    CHECK(std::set<CanonicalForm>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
  }
  CHECK_THROWS(AllMinors(Uniform(5, 11)));
}

TEST_CASE("binary and ternary representability") {
  CHECK(IsBinary(Wheel(4)));
  CHECK(IsTernary(Wheel(4)));
  CHECK(IsTernary(Named("AG23e")));
  CHECK_FALSE(IsBinary(Named("AG23e")));
  CHECK_FALSE(IsTernary(Uniform(2, 5)));
  CHECK(IsBinary(Named("F7")));
  CHECK_FALSE(IsTernary(Named("F7")));
  CHECK(IsTernary(Named("P8")));

  for (const Matroid& m : SmallClasses(5)) {
    CHECK(IsBinary(m) == oracle::RepresentableBrute(m, 2));
    CHECK(IsTernary(m) == oracle::RepresentableBrute(m, 3));
  }
  for (const Matroid& m : {Wheel(3), Whirl(3), Uniform(3, 6), Uniform(2, 6),
                           MultiParallelUniform(2, 4, {2, 2})}) {
    CHECK(IsBinary(m) == oracle::RepresentableBrute(m, 2));
    CHECK(IsTernary(m) == oracle::RepresentableBrute(m, 3));
  }
}
