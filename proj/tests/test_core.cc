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


#include <algorithm>

#include "doctest.h"
#include "oracles.h"
#include "spikelab/catalog.h"
#include "spikelab/error.h"
#include "spikelab/matroid.h"
#include "spikelab/transforms.h"

using namespace spikelab;

namespace {

ErrorCode CodeOf(const auto& f) {
  try {
    f();
  } catch (const MatroidError& e) {
    return e.code();
  }
  FAIL("expected a MatroidError");
  return ErrorCode::kParseError;
}

std::vector<uint32_t> Masks(const std::vector<ElementSet>& sets) {
  std::vector<uint32_t> out;
  for (ElementSet s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("from bases") {
  const Matroid u12 = FromBases(2, {{0}, {1}});
  CHECK(u12.rank() == 1);
  CHECK(u12.rank({0, 1}) == 1);

  std::vector<ElementSet> pairs;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) pairs.push_back({a, b});
  }
  const Matroid u24 = FromBases(4, pairs);
  ForEachSubset(u24.ground(), [&](ElementSet s) {
    CHECK(u24.rank(s) == std::min(s.size(), 2));
  });

  CHECK(FromBases(3, {{0, 1}, {0, 2}}).rank({1, 2}) == 1);
  CHECK(oracle::SatisfiesExchange({0b0011, 0b1100}) == false);
  CHECK(CodeOf([] { FromBases(4, {{0, 1}, {2, 3}}); }) ==
        ErrorCode::kExchangeAxiomViolation);
  CHECK(CodeOf([] { FromBases(3, {}); }) == ErrorCode::kEmptyBasisFamily);
  CHECK(CodeOf([] { FromBases(3, {{0}, {1, 2}}); }) == ErrorCode::kUnequalBasisSizes);
  CHECK(CodeOf([] { FromBases(2, {{0, 5}}); }) == ErrorCode::kOutOfRangeElement);
  CHECK(CodeOf([] { FromBases(17, {{0}}); }) == ErrorCode::kCapacityExceeded);
}

TEST_CASE("from bases agrees with the brute-force exchange oracle") {
  // Every basis family on four elements: accepted exactly when exchange holds.
  for (int r = 1; r <= 3; ++r) {
    std::vector<ElementSet> subsets;
    ForEachSubset(ElementSet::Full(4), [&](ElementSet s) {
      if (s.size() == r) subsets.push_back(s);
    });
    for (uint32_t pick = 1; pick < (1u << subsets.size()); ++pick) {
      std::vector<ElementSet> bases;
      std::vector<uint32_t> masks;
      for (size_t i = 0; i < subsets.size(); ++i) {
        if ((pick >> i) & 1u) {
          bases.push_back(subsets[i]);
          masks.push_back(subsets[i].bits());
        }
      }
      if (oracle::SatisfiesExchange(masks)) {
        CHECK(FromBases(4, bases) == oracle::FromBasesBrute(4, masks));
      } else {
        CHECK(CodeOf([&] { FromBases(4, bases); }) == ErrorCode::kExchangeAxiomViolation);
      }
    }
  }
}

TEST_CASE("from circuits") {
  CHECK(FromCircuits(3, {{0, 1, 2}}) == Uniform(2, 3));
  // {0,1} and {1,2} alone break elimination; the class needs {0,2} as well.
  CHECK(CodeOf([] { FromCircuits(4, {{0, 1}, {1, 2}}); }) ==
        ErrorCode::kEliminationAxiomViolation);
  const Matroid parallel = FromCircuits(4, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(parallel.rank() == 2);
  CHECK(parallel.rank({0, 1, 2}) == 1);
  CHECK(CodeOf([] { FromCircuits(4, {{0, 1}, {0, 1, 2}}); }) ==
        ErrorCode::kCircuitContainment);

  // Free rank-3 tipped spike from its tip triangles and leg-pair unions.
  std::vector<ElementSet> circuits;
  for (int i = 0; i < 3; ++i) circuits.push_back({6, 2 * i, 2 * i + 1});
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) circuits.push_back({2 * i, 2 * i + 1, 2 * j, 2 * j + 1});
  }
  const Matroid spike = FromCircuits(7, circuits, 3);
  CHECK(spike.size() == 7);
  CHECK(spike.rank() == 3);
  CHECK(spike == Spike(SpikeSpec{3, 1, {}}));
}

TEST_CASE("rank and closure") {
  const Matroid u24 = Uniform(2, 4);
  CHECK(u24.rank({0, 1}) == 2);
  CHECK(u24.Closure({0, 1}) == u24.ground());
  const Matroid spike = Spike(SpikeSpec{3, 1, {}});
  CHECK(spike.rank({6, 0, 1}) == 2);
  CHECK(spike.IsIndependent({0, 2, 4}));
  CHECK(CodeOf([&] { spike.rank({9}); }) == ErrorCode::kOutOfRangeElement);
}

TEST_CASE("circuits, flats and circuit-hyperplanes") {
  const Matroid u24 = Uniform(2, 4);
  CHECK(Circuits(u24).size() == 4);
  for (ElementSet c : Circuits(u24)) CHECK(c.size() == 3);
  CHECK(CircuitHyperplanes(u24).empty());

  const Matroid wheel = Wheel(4);
  const auto ch = CircuitHyperplanes(wheel);
  CHECK(std::find(ch.begin(), ch.end(), WheelRim(4)) != ch.end());
  CHECK(CircuitHyperplanes(Named("O7")).size() == 3);

  for (const Matroid& m : {Named("P7"), Named("F7"), Wheel(3), Uniform(3, 6), Named("P8")}) {
    CHECK(Masks(Circuits(m)) == oracle::CircuitsBrute(m));
    for (ElementSet h : Hyperplanes(m)) {
      CHECK(m.IsFlat(h));
      CHECK(m.rank(h) == m.rank() - 1);
    }
  }
}

TEST_CASE("loops, parallel classes and simplification") {
  const Matroid m = DirectSum(Uniform(1, 3), Uniform(0, 2));
  CHECK(Loops(m) == ElementSet{3, 4});
  const auto classes = ParallelClasses(m);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == ElementSet{0, 1, 2});
  CHECK(Simplify(m).matroid == Uniform(1, 1));

  const Matroid pu = MultiParallelUniform(2, 5, {2, 2});
  CHECK(pu.size() == 7);
  CHECK(Simplify(pu).matroid == Uniform(2, 5));
  int pairs = 0;
  for (ElementSet c : ParallelClasses(pu)) pairs += c.size() == 2;
  CHECK(pairs == 2);

  const Reduction same = Simplify(Named("P8"));
  CHECK(same.matroid == Named("P8"));
  for (int e = 0; e < 8; ++e) CHECK(same.image[e] == e);
}

TEST_CASE("axiom validation") {
  for (const std::string& name : NamedMatroidNames()) {
    CAPTURE(name);
    CHECK(ValidateAxioms(Named(name)).valid);
  }
  std::vector<uint8_t> table = Uniform(2, 4).rank_table();
  table[0b0011] = 3;
  const AxiomReport bad = ValidateRankTable(4, table);
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.first_violation.has_value());
  CHECK(!bad.first_violation->witness.empty());
  CHECK(ValidateAxioms(Relax(Named("P7"), {0, 1, 6})).valid);
}

TEST_CASE("deletion, contraction and duality") {
  CHECK(Contract(Uniform(2, 4), {0}) == Uniform(1, 3));
  CHECK(Delete(Uniform(2, 4), {0}) == Uniform(2, 3));
  CHECK(Dual(Uniform(2, 4)) == Uniform(2, 4));
  CHECK(Dual(Uniform(1, 5)) == Uniform(4, 5));
  CHECK(CodeOf([] { Minor(Uniform(2, 4), {0}, {0}); }) == ErrorCode::kOverlappingSets);

  // Minors agree with the rank formula r(X u C) - r(C) on every labeled matroid
  // with four elements.
  for (const Matroid& m : oracle::AllLabeledMatroids(4)) {
    for (uint32_t c = 0; c < 16; ++c) {
      for (uint32_t d = 0; d < 16; ++d) {
        if (c & d) continue;
        const auto [minor, witness] = Minor(m, ElementSet(c), ElementSet(d));
        CHECK(minor == oracle::MinorBrute(m, c, d));
        CHECK(witness.element_map.size() == static_cast<size_t>(minor.size()));
      }
    }
    CHECK(Dual(Dual(m)) == m);
  }
}

TEST_CASE("direct sum and parallel replacement") {
  const Matroid m = DirectSum(Uniform(1, 5), Uniform(0, 2));
  CHECK(m.size() == 7);
  CHECK(m.rank() == 1);
  CHECK(Loops(m).size() == 2);

  const Matroid u24 = Uniform(2, 4);
  const Matroid replaced = ParallelReplace(u24, {{0, 2}, {1, 3}});
  CHECK(replaced.size() == 7);
  CHECK(ParallelReplace(u24, {}) == u24);
  const Matroid doubled = ParallelReplace(Uniform(2, 3), {{0, 2}, {1, 2}, {2, 2}});
  CHECK(doubled.size() == 6);
  CHECK(ParallelClasses(doubled).size() == 3);
  CHECK(doubled == DoubledUniform(2, 3));
}

TEST_CASE("principal extension and relaxation") {
  const Matroid o7 = PrincipalExtension(Wheel(3), {0, 1, 3});
  CHECK(o7 == Named("O7"));
  const Matroid free = PrincipalExtension(Uniform(2, 3), Uniform(2, 3).ground());
  CHECK(free == Uniform(2, 4));
  CHECK(CodeOf([] { PrincipalExtension(Uniform(2, 4), {0, 1}); }) ==
        ErrorCode::kNotAFlat);
  CHECK(CodeOf([] { Relax(Uniform(2, 4), {0, 1, 2}); }) ==
        ErrorCode::kNotACircuitHyperplane);
  CHECK(Bases(Relax(Named("P7"), {0, 1, 6})).size() == Bases(Named("P7")).size() + 1);
}

TEST_CASE("line format round trip") {
  for (const std::string& name : NamedMatroidNames()) {
    const Matroid m = Named(name);
    CHECK(FromLine(ToLine(m)) == m);
  }
  CHECK(ToLine(Uniform(1, 2)) == "2 1 2 1 2");
  CHECK(CodeOf([] { FromLine("2 1 2 2 1"); }) == ErrorCode::kParseError);
}
