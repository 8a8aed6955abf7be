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

#include "spikelab/store.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "spikelab/error.h"
#include "spikelab/extensions.h"
#include "spikelab/parallel.h"
#include "spikelab/representability.h"
#include "spikelab/spike.h"

namespace spikelab {

std::string CatalogFlags::ToWord() const {
  std::string word;
  for (bool b : {simple, cosimple, connected, three_connected, binary, ternary, in_s,
                 in_s3}) {
    word.push_back(b ? '1' : '0');
  }
  return word;
}

CatalogFlags CatalogFlags::FromWord(const std::string& word) {
  if (word.size() != 8 || word.find_first_not_of("01") != std::string::npos) {
    throw MatroidError(ErrorCode::kParseError, "bad flag word '" + word + "'");
  }
  CatalogFlags f;
  bool* fields[] = {&f.simple, &f.cosimple, &f.connected, &f.three_connected,
                    &f.binary, &f.ternary,  &f.in_s,      &f.in_s3};
  for (int i = 0; i < 8; ++i) *fields[i] = word[i] == '1';
  return f;
}

CatalogFlags ComputeFlags(const Matroid& m) {
  CatalogFlags f;
  f.simple = IsSimple(m);
  f.cosimple = IsCosimple(m);
  f.connected = IsConnected(m);
  f.three_connected = IsThreeConnected(m);
  f.binary = IsBinary(m);
  f.ternary = IsTernary(m);
  f.in_s = IsSpikeMinorExcluded(m).in_class;
  f.in_s3 = f.three_connected && f.in_s;
  return f;
}

CatalogRecord MakeRecord(const Matroid& m) {
  CatalogRecord record;
  record.canonical = ComputeCanonicalForm(m);
  record.flags = ComputeFlags(FromCanonicalForm(record.canonical));
  return record;
}

std::string ToRecordLine(const CatalogRecord& record) {
  return ToLine(record.matroid()) + " " + record.flags.ToWord();
}

CatalogRecord FromRecordLine(const std::string& line) {
  std::istringstream in(line);
  std::string token;
  std::vector<std::string> tokens;
  while (in >> token) tokens.push_back(token);
  if (tokens.size() < 4) {
    throw MatroidError(ErrorCode::kParseError, "short catalog record");
  }
  const Matroid m = FromLine(line);
  CatalogRecord record;
  record.canonical = ComputeCanonicalForm(m);
  if (ToLine(FromCanonicalForm(record.canonical)) != ToLine(m)) {
    throw MatroidError(ErrorCode::kParseError, "catalog record is not canonical");
  }
  record.flags = CatalogFlags::FromWord(tokens.back());
  return record;
}

CatalogStore::CatalogStore(std::filesystem::path dir) : path_(dir / "catalog.txt") {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw MatroidError(ErrorCode::kStoreFailure,
                       "cannot create " + dir.string() + ": " + ec.message());
  }
}

std::vector<CatalogRecord> CatalogStore::Load() const {
  std::vector<CatalogRecord> out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(FromRecordLine(line));
  }
  return out;
}

void CatalogStore::Append(const CatalogRecord& record) {
  std::lock_guard<std::mutex> lock(mutex_);
  std::ofstream out(path_, std::ios::app);
  out << ToRecordLine(record) << '\n';
  if (!out) {
    throw MatroidError(ErrorCode::kStoreFailure, "cannot append to " + path_.string());
  }
}

std::vector<std::vector<CanonicalForm>> EnumerateLevels(
    int max_n, const std::function<void(int, size_t)>& on_level) {
  if (max_n < 0 || max_n > kCatalogLimit) {
    throw MatroidError(ErrorCode::kCapacityGuard,
                       "catalog size must be in 0.." + std::to_string(kCatalogLimit));
  }
  std::vector<std::vector<CanonicalForm>> levels;
  levels.push_back({ComputeCanonicalForm(Matroid())});
  if (on_level) on_level(0, 1);
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<CanonicalForm>& parents = levels.back();
    std::vector<std::vector<CanonicalForm>> children(parents.size());
    ParallelFor(parents.size(), [&](size_t i) {
      std::vector<CanonicalForm>& mine = children[i];
      for (const Matroid& ext : SingleElementExtensions(FromCanonicalForm(parents[i]))) {
        mine.push_back(ComputeCanonicalForm(ext));
      }
      std::sort(mine.begin(), mine.end());
      mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
    });
    std::set<CanonicalForm> merged;
    for (auto& c : children) merged.insert(c.begin(), c.end());
    levels.emplace_back(merged.begin(), merged.end());
    if (on_level) on_level(n, levels.back().size());
  }
  return levels;
}

std::vector<int> LevelCounts(const std::vector<CatalogRecord>& records) {
  std::vector<int> counts;
  for (const CatalogRecord& r : records) {
    if (static_cast<int>(counts.size()) <= r.n()) counts.resize(r.n() + 1, 0);
    ++counts[r.n()];
  }
  return counts;
}

bool LevelCountsMatch(const std::vector<int>& counts) {
  if (counts.empty() || counts.size() > kPublishedLevelCounts.size()) return false;
  for (size_t n = 0; n < counts.size(); ++n) {
    if (counts[n] != kPublishedLevelCounts[n]) return false;
  }
  return true;
}

CatalogSummary GenerateCatalog(int max_n, CatalogStore* store) {
  const auto levels = EnumerateLevels(max_n);
  std::vector<CanonicalForm> forms;
  CatalogSummary summary;
  for (const auto& level : levels) {
    summary.level_counts.push_back(static_cast<int>(level.size()));
    forms.insert(forms.end(), level.begin(), level.end());
  }
  summary.counts_match = LevelCountsMatch(summary.level_counts);
  summary.records.resize(forms.size());
  ParallelFor(forms.size(), [&](size_t i) {
    summary.records[i].canonical = forms[i];
    summary.records[i].flags = ComputeFlags(FromCanonicalForm(forms[i]));
  });
  if (store != nullptr) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> present;
    for (const CatalogRecord& r : store->Load()) present.insert(r.canonical);
    for (const CatalogRecord& r : summary.records) {
      if (!present.contains(r.canonical)) store->Append(r);
    }
  }
  return summary;
}

}  // namespace spikelab
