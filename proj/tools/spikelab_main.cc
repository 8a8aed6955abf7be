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


// Command-line front end for the spikelab library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spikelab/analysis.h"
#include "spikelab/error.h"
#include "spikelab/expression.h"
#include "spikelab/minors.h"
#include "spikelab/spike.h"
#include "spikelab/store.h"
#include "spikelab/verify.h"

namespace {

using namespace spikelab;

Matroid ParseMatroidLine(const std::string& line) {
  try {
    return FromLine(line);
  } catch (const MatroidError&) {
  }
  try {
    return FromRecordLine(line).matroid();
  } catch (const MatroidError&) {
  }
  return ParseExpression(line);
}

// An argument is a file of matroid lines when such a file exists, and an
// expression otherwise.
std::vector<Matroid> LoadMatroids(const std::string& arg) {
  std::vector<Matroid> out;
  if (!std::filesystem::is_regular_file(arg)) {
    out.push_back(ParseExpression(arg));
    return out;
  }
  std::ifstream in(arg);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(ParseMatroidLine(line));
  }
  if (out.empty()) throw MatroidError(ErrorCode::kParseError, arg + " holds no matroid");
  return out;
}

Matroid LoadOne(const std::string& arg) { return LoadMatroids(arg).front(); }

std::string Join(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

void PrintInfo(const Matroid& m) {
  const CatalogFlags f = ComputeFlags(m);
  std::cout << "line:        " << ToLine(m) << '\n'
            << "canonical:   " << ToLine(FromCanonicalForm(ComputeCanonicalForm(m))) << '\n'
            << "n=" << m.size() << " r=" << m.rank() << " bases=" << Bases(m).size()
            << " circuits=" << Circuits(m).size()
            << " cocircuits=" << Cocircuits(m).size() << '\n'
            << "flags:       " << f.ToWord()
            << "  (simple cosimple connected 3connected binary ternary inS inS3)\n";
}

void PrintWitness(const MinorWitness& w) {
  std::cout << "contract " << w.contracted.ToString() << " delete " << w.deleted.ToString()
            << " map " << Join(w.element_map) << '\n';
}

void PrintVerdict(const char* label, const MembershipVerdict& v) {
  std::cout << label << ": " << (v.in_class ? "in S" : "not in S");
  if (v.structural_case != StructuralCase::kNone) {
    std::cout << " (" << StructuralCaseName(v.structural_case) << ")";
  }
  if (v.embedding) {
    std::cout << " tip class " << v.embedding->tip_class.ToString() << " legs";
    for (ElementSet leg : v.embedding->legs) std::cout << ' ' << leg.ToString();
  }
  if (v.excluded) {
    std::cout << " contains " << v.excluded->pattern
              << (v.excluded->in_dual ? " in the dual: " : ": ");
    PrintWitness(v.excluded->witness);
    return;
  }
  std::cout << '\n';
}

std::vector<CatalogRecord> ObtainCatalog(const std::string& dir, int max_n) {
  if (!dir.empty()) {
    CatalogStore store(dir);
    std::vector<CatalogRecord> records = store.Load();
    std::vector<CatalogRecord> kept;
    for (CatalogRecord& r : records) {
      if (r.n() <= max_n) kept.push_back(std::move(r));
    }
    if (!kept.empty() && static_cast<int>(LevelCounts(kept).size()) == max_n + 1) {
      return kept;
    }
    return GenerateCatalog(max_n, &store).records;
  }
  return GenerateCatalog(max_n).records;
}

int Run(int argc, char** argv) {
  CLI::App app{"Exact matroid engine and spike excluded-minor verifier"};
  app.require_subcommand(1);

  std::string expr;
  auto* construct = app.add_subcommand("construct", "Print the matroid line of an expression");
  construct->add_option("expr", expr)->required();

  std::string file;
  auto* info = app.add_subcommand("info", "Describe each matroid of a file or expression");
  info->add_option("file", file)->required();

  std::string a, b;
  auto* iso = app.add_subcommand("iso", "Test two matroids for isomorphism");
  iso->add_option("a", a)->required();
  iso->add_option("b", b)->required();

  std::string host, pattern;
  auto* minor = app.add_subcommand("minor", "Search for a minor");
  minor->add_option("host", host)->required();
  minor->add_option("pattern", pattern)->required();

  auto* decide = app.add_subcommand("decide", "Run both membership deciders");
  decide->add_option("file", file)->required();

  int max_n = 7;
  std::string out_dir;
  auto* enumerate = app.add_subcommand("enumerate", "Build the catalog");
  enumerate->add_option("--max-n", max_n)->check(CLI::Range(0, kCatalogLimit));
  enumerate->add_option("--out", out_dir)->required();

  std::string target;
  std::string catalog_dir;
  uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run a verification driver");
  verify
      ->add_option("target", target,
                   "theorem1, theorem2, corollaries, lemmas, algebra, p8, certificates or all")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "corollaries", "lemmas", "algebra", "p8",
                             "certificates", "all"}));
  verify->add_option("--catalog", catalog_dir, "Catalog directory, filled when incomplete");
  verify->add_option("--max-n", max_n)->check(CLI::Range(0, kCatalogLimit));
  verify->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  if (*construct) {
    std::cout << ToLine(ParseExpression(expr)) << '\n';
    return 0;
  }
  if (*info) {
    bool first = true;
    for (const Matroid& m : LoadMatroids(file)) {
      if (!first) std::cout << '\n';
      first = false;
      PrintInfo(m);
    }
    return 0;
  }
  if (*iso) {
    const auto map = FindIsomorphism(LoadOne(a), LoadOne(b));
    if (!map) {
      std::cout << "not isomorphic\n";
      return 1;
    }
    std::cout << "isomorphic: " << Join(*map) << '\n';
    return 0;
  }
  if (*minor) {
    const auto w = HasMinor(LoadOne(host), LoadOne(pattern));
    if (!w) {
      std::cout << "no minor\n";
      return 1;
    }
    PrintWitness(*w);
    return 0;
  }
  if (*decide) {
    bool agree = true;
    for (const Matroid& m : LoadMatroids(file)) {
      const MembershipVerdict s = IsSpikeMinorStructural(m);
      const MembershipVerdict x = IsSpikeMinorExcluded(m);
      std::cout << ToLine(m) << '\n';
      PrintVerdict("  structural", s);
      PrintVerdict("  excluded  ", x);
      std::cout << "  agreement: " << (s.in_class == x.in_class ? "yes" : "NO") << '\n';
      agree = agree && s.in_class == x.in_class;
    }
    return agree ? 0 : 1;
  }
  if (*enumerate) {
    CatalogStore store(out_dir);
    const CatalogSummary summary = GenerateCatalog(max_n, &store);
    std::cout << "levels:";
    for (int c : summary.level_counts) std::cout << ' ' << c;
    std::cout << "\nrecords: " << summary.records.size() << " in " << store.path().string()
              << "\ncounts match published enumeration: "
              << (summary.counts_match ? "yes" : "no") << '\n';
    return summary.counts_match ? 0 : 1;
  }
  if (*verify) {
    std::vector<CatalogRecord> catalog;
    const bool needs_catalog = target != "certificates";
    if (needs_catalog) {
      catalog = ObtainCatalog(catalog_dir, max_n);
      if (!LevelCountsMatch(LevelCounts(catalog))) {
        std::cout << "[FAIL] catalog level counts differ from the published enumeration; "
                     "refusing to run catalog sweeps\n";
        return 1;
      }
    }
    std::vector<VerificationReport> reports;
    auto want = [&](const char* name) { return target == name || target == "all"; };
    if (want("theorem1")) reports.push_back(VerifyTheorem1(catalog));
    if (want("p8")) reports.push_back(VerifyP8(catalog));
    if (want("theorem2")) reports.push_back(VerifyTheorem2(catalog));
    if (want("corollaries")) reports.push_back(VerifyCorollaries(catalog));
    if (want("lemmas")) reports.push_back(VerifyLemmas(catalog, seed));
    if (want("algebra")) reports.push_back(VerifyAlgebra(catalog, seed));
    if (target == "certificates") reports.push_back(VerifyExcludedMinorCertificates());
    bool ok = true;
    for (const VerificationReport& r : reports) {
      std::cout << r.ToText();
      ok = ok && r.passed();
    }
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const spikelab::MatroidError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
