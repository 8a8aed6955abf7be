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


#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracles.h"
#include "spikelab/analysis.h"
#include "spikelab/catalog.h"
#include "spikelab/error.h"
#include "spikelab/expression.h"
#include "spikelab/extensions.h"
#include "spikelab/store.h"
#include "spikelab/transforms.h"

using namespace spikelab;

namespace {

// Labeled single-element extensions: matroids on n+1 elements whose
// deletion of the last element is m.
std::set<std::vector<uint8_t>> ExtensionsBrute(const Matroid& m,
                                               const std::vector<Matroid>& bigger) {
  std::set<std::vector<uint8_t>> out;
  for (const Matroid& x : bigger) {
    if (Delete(x, {m.size()}) == m) out.insert(x.rank_table());
  }
  return out;
}

}  // namespace

TEST_CASE("single-element extensions match the rank-table oracle") {
  for (int n = 0; n <= 4; ++n) {
    const std::vector<Matroid> bigger = oracle::AllLabeledMatroids(n + 1);
    for (const Matroid& m : oracle::AllLabeledMatroids(n)) {
      std::set<std::vector<uint8_t>> got;
      for (const Matroid& x : SingleElementExtensions(m)) got.insert(x.rank_table());
      CHECK(got == ExtensionsBrute(m, bigger));
      CHECK(ModularCuts(m).size() == got.size());
    }
  }
}

TEST_CASE("modular cut counts") {
  CHECK(ModularCuts(Uniform(2, 7)).size() == 10);
  CHECK(ModularCuts(Uniform(3, 6)).size() == 84);
  CHECK(ModularCuts(Named("F7")).size() == 17);
  // The empty cut adds a coloop, the full cut a loop.
  const auto cuts = ModularCuts(Uniform(1, 2));
  bool coloop = false, loop = false;
  for (const ModularCut& c : cuts) {
    const Matroid x = ExtendByCut(Uniform(1, 2), c);
    coloop = coloop || Coloops(x) == ElementSet{2};
    loop = loop || Loops(x) == ElementSet{2};
  }
  CHECK(coloop);
  CHECK(loop);
  CHECK_THROWS_AS(SingleElementExtensions(Uniform(2, 9)), MatroidError);
}

TEST_CASE("level counts") {
  const auto levels = EnumerateLevels(6);
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(levels[n].size()) == kPublishedLevelCounts[n]);
  }
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(oracle::DedupeByIsomorphism(oracle::AllLabeledMatroids(n)).size() == levels[n].size());
  }
}

TEST_CASE("extension order does not change the next level") {
  const auto levels = EnumerateLevels(5);
  std::vector<CanonicalForm> parents = levels[4];
  std::mt19937_64 rng(3);
  for (int round = 0; round < 3; ++round) {
    std::shuffle(parents.begin(), parents.end(), rng);
    std::set<CanonicalForm> next;
    for (const CanonicalForm& p : parents) {
      std::vector<Matroid> ext = SingleElementExtensions(FromCanonicalForm(p));
      std::shuffle(ext.begin(), ext.end(), rng);
      for (const Matroid& x : ext) next.insert(ComputeCanonicalForm(x));
    }
    CHECK(std::vector<CanonicalForm>(next.begin(), next.end()) == levels[5]);
  }
}

TEST_CASE("record lines and flags") {
  const CatalogRecord record = MakeRecord(Wheel(4));
  CHECK(record.flags.ToWord() == "11111100");
  CHECK(MakeRecord(Named("AG23e")).flags.ToWord() == "11110100");
  CHECK(MakeRecord(Uniform(3, 6)).flags.ToWord() == "11110011");
  CHECK(MakeRecord(Uniform(2, 5)).flags.binary == false);
  CHECK(MakeRecord(Uniform(2, 5)).flags.ternary == false);
  const std::string line = ToRecordLine(record);
  CHECK(FromRecordLine(line).canonical == record.canonical);
  CHECK(FromRecordLine(line).flags == record.flags);
  CHECK_THROWS_AS(FromRecordLine(ToLine(Wheel(4)) + " 1111"), MatroidError);
  CHECK(CatalogFlags::FromWord("10101010").ToWord() == "10101010");
}

TEST_CASE("catalog store") {
  const auto dir = std::filesystem::temp_directory_path() / "spikelab_store_test";
  std::filesystem::remove_all(dir);
  {
    CatalogStore store(dir);
    const CatalogSummary summary = GenerateCatalog(4, &store);
    CHECK(summary.counts_match);
    CHECK(summary.records.size() == 1 + 2 + 4 + 8 + 17);
    CHECK(store.Load().size() == summary.records.size());
    // A second run appends nothing.
    GenerateCatalog(4, &store);
    CHECK(store.Load().size() == summary.records.size());
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("expressions") {
  CHECK(ParseExpression("U(2,4)") == Uniform(2, 4));
  CHECK(ParseExpression("PU(2,5;2,2)") == MultiParallelUniform(2, 5, {2, 2}));
  CHECK(ParseExpression("2U(2,3)") == DoubledUniform(2, 3));
  CHECK(ParseExpression("dsum(U(1,5),U(0,2))") == DirectSum(Uniform(1, 5), Uniform(0, 2)));
  CHECK(ParseExpression("dual(U(1,3))") == Uniform(2, 3));
  CHECK(ParseExpression("del(U(2,4),0)") == Uniform(2, 3));
  CHECK(ParseExpression("con(U(2,4),0)") == Uniform(1, 3));
  CHECK(ParseExpression("relax(P7,{0,1,6})") == Named("P7-"));
  CHECK(ParseExpression("pext(wheel(3),{0,1,3})") == Named("O7"));
  CHECK(ParseExpression("spike(3;tip=1;trav=[xxx,yyy])") == Named("P7"));
  CHECK(ParseExpression("whirl(4)") == Named("W4"));
  for (const char* name : {"P7", "P7-", "P7=", "P8", "O7", "O7-", "AG23e", "F7"}) {
    const Matroid m = ParseExpression(name);
    CHECK(ParseExpression(BasesExpression(m)) == m);
  }
  for (const char* bad : {"U(2,", "Q(1)", "U(2,4) x", "spike(3;trav=[xx])", "nope"}) {
    CAPTURE(bad);
    try {
      ParseExpression(bad);
      FAIL("accepted");
    } catch (const MatroidError& e) {
      CHECK(e.code() == ErrorCode::kParseError);
    }
  }
}
