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

#ifndef SPIKELAB_STORE_H_
#define SPIKELAB_STORE_H_

#include <array>
#include <filesystem>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "spikelab/analysis.h"
#include "spikelab/matroid.h"

namespace spikelab {

// Matroids on n = 0..8 elements up to isomorphism.
inline constexpr std::array<int, 9> kPublishedLevelCounts = {1,  2,  4,   8,   17,
                                                             38, 98, 306, 1724};
inline constexpr int kCatalogLimit = 8;

struct CatalogFlags {
  bool simple = false;
  bool cosimple = false;
  bool connected = false;
  bool three_connected = false;
  bool binary = false;
  bool ternary = false;
  bool in_s = false;
  bool in_s3 = false;

  // Eight 0/1 characters in field order.
  std::string ToWord() const;
  static CatalogFlags FromWord(const std::string& word);
  friend bool operator==(const CatalogFlags&, const CatalogFlags&) = default;
};

struct CatalogRecord {
  CanonicalForm canonical;
  CatalogFlags flags;

  int n() const { return canonical.ground_size; }
  int r() const { return canonical.rank; }
  Matroid matroid() const { return FromCanonicalForm(canonical); }
};

CatalogFlags ComputeFlags(const Matroid& m);
CatalogRecord MakeRecord(const Matroid& m);

std::string ToRecordLine(const CatalogRecord& record);
// Throws kParseError on malformed lines.
CatalogRecord FromRecordLine(const std::string& line);

// Append-only record file DIR/catalog.txt. Appends are serialized.
class CatalogStore {
 public:
  explicit CatalogStore(std::filesystem::path dir);

  const std::filesystem::path& path() const { return path_; }
  std::vector<CatalogRecord> Load() const;
  void Append(const CatalogRecord& record);

 private:
  std::filesystem::path path_;
  std::mutex mutex_;
};

// Canonical forms per level 0..max_n; level k+1 is the deduplicated set of
// single-element extensions of level k. Throws kCapacityGuard above 8.
std::vector<std::vector<CanonicalForm>> EnumerateLevels(
    int max_n, const std::function<void(int, size_t)>& on_level = {});

struct CatalogSummary {
  std::vector<CatalogRecord> records;  // level by level, canonical order
  std::vector<int> level_counts;
  bool counts_match = false;  // against kPublishedLevelCounts
};

// Enumerates, computes flags and appends records missing from `store`
// (which may be null).
CatalogSummary GenerateCatalog(int max_n, CatalogStore* store = nullptr);

std::vector<int> LevelCounts(const std::vector<CatalogRecord>& records);
bool LevelCountsMatch(const std::vector<int>& counts);

}  // namespace spikelab

#endif  // SPIKELAB_STORE_H_
