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

#include "spikelab/catalog.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "spikelab/analysis.h"
#include "spikelab/error.h"
#include "spikelab/transforms.h"

namespace spikelab {

ElementSet SpikeLeg(int leg) { return {SpikeX(leg), SpikeY(leg)}; }

ElementSet TraversalSet(uint32_t choice, int rank) {
  ElementSet out;
  for (int i = 0; i < rank; ++i) {
    out = out.With((choice >> i) & 1u ? SpikeY(i) : SpikeX(i));
  }
  return out;
}

Matroid Uniform(int r, int n) {
  if (r < 0 || n < 0 || r > n) {
    throw MatroidError(ErrorCode::kBadParameters,
                       "U(" + std::to_string(r) + "," + std::to_string(n) + ")");
  }
  if (n > kMaxElements) {
    throw MatroidError(ErrorCode::kCapacityExceeded,
                       std::to_string(n) + " elements exceed capacity");
  }
  const uint32_t total = uint32_t{1} << n;
  std::vector<uint8_t> table(total);
  for (uint32_t s = 0; s < total; ++s) {
    table[s] = static_cast<uint8_t>(std::min(std::popcount(s), r));
  }
  return Matroid::FromRankTable(n, std::move(table));
}

Matroid MultiParallelUniform(int r, int n, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) > n) {
    throw MatroidError(ErrorCode::kBadParameters,
                       "more parallel classes than elements");
  }
  std::map<int, int> by_element;
  for (size_t i = 0; i < sizes.size(); ++i) {
    by_element[static_cast<int>(i)] = sizes[i];
  }
  return ParallelReplace(Uniform(r, n), by_element);
}

Matroid DoubledUniform(int r, int n) {
  return MultiParallelUniform(r, n, std::vector<int>(n, 2));
}

Matroid Spike(const SpikeSpec& spec) {
  const int r = spec.rank;
  if (r < 3) {
    throw MatroidError(ErrorCode::kBadParameters, "spike rank must be >= 3");
  }
  if (spec.tip_class_size < 0) {
    throw MatroidError(ErrorCode::kBadParameters, "negative tip class size");
  }
  const int n = 2 * r + spec.tip_class_size;
  if (n > kMaxElements) {
    throw MatroidError(ErrorCode::kCapacityExceeded,
                       "spike needs " + std::to_string(n) + " elements");
  }
  for (size_t i = 0; i < spec.traversals.size(); ++i) {
    if (spec.traversals[i] >> r) {
      throw MatroidError(ErrorCode::kBadParameters,
                         "traversal choice wider than the rank");
    }
    for (size_t j = i + 1; j < spec.traversals.size(); ++j) {
      // Agreeing on more than r - 2 legs means differing on at most one.
      if (std::popcount(spec.traversals[i] ^ spec.traversals[j]) < 2) {
        const ElementSet a = TraversalSet(spec.traversals[i], r);
        const ElementSet b = TraversalSet(spec.traversals[j], r);
        throw MatroidError(ErrorCode::kIllegalTraversalPair,
                           a.ToString() + " and " + b.ToString() +
                               " share more than r-2 elements",
                           {a, b});
      }
    }
  }

  std::vector<ElementSet> circuits;
  for (int copy = 0; copy < spec.tip_class_size; ++copy) {
    const int t = SpikeTip(spec, copy);
    for (int i = 0; i < r; ++i) circuits.push_back(SpikeLeg(i).With(t));
    for (int other = copy + 1; other < spec.tip_class_size; ++other) {
      circuits.push_back({t, SpikeTip(spec, other)});
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) circuits.push_back(SpikeLeg(i) | SpikeLeg(j));
  }
  for (uint32_t choice : spec.traversals) {
    circuits.push_back(TraversalSet(choice, r));
  }
  return FromCircuits(n, circuits, r);
}

Matroid FromGraph(const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  if (m > kMaxElements) {
    throw MatroidError(ErrorCode::kCapacityExceeded,
                       std::to_string(m) + " edges exceed capacity");
  }
  int vertices = 0;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0) {
      throw MatroidError(ErrorCode::kBadParameters, "negative vertex label");
    }
    vertices = std::max({vertices, u + 1, v + 1});
  }
  const uint32_t total = uint32_t{1} << m;
  std::vector<uint8_t> table(total);
  std::vector<int> parent(vertices);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (uint32_t s = 0; s < total; ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int rank = 0;
    for (uint32_t b = s; b != 0; b &= b - 1) {
      const auto& [u, v] = edges[std::countr_zero(b)];
      const int a = find(u);
      const int c = find(v);
      if (a != c) {
        parent[a] = c;
        ++rank;
      }
    }
    table[s] = static_cast<uint8_t>(rank);
  }
  return Matroid::FromRankTable(m, std::move(table));
}

Matroid FromMatrixGF(int p, const std::vector<std::vector<int>>& columns) {
  if (p != 2 && p != 3) {
    throw MatroidError(ErrorCode::kBadField,
                       "only GF(2) and GF(3) are supported, got " + std::to_string(p));
  }
  const int m = static_cast<int>(columns.size());
  if (m > kMaxElements) {
    throw MatroidError(ErrorCode::kCapacityExceeded,
                       std::to_string(m) + " columns exceed capacity");
  }
  const size_t rows = columns.empty() ? 0 : columns.front().size();
  std::vector<std::vector<int>> reduced(m, std::vector<int>(rows));
  for (int j = 0; j < m; ++j) {
    if (columns[j].size() != rows) {
      throw MatroidError(ErrorCode::kBadParameters, "ragged matrix columns");
    }
    for (size_t i = 0; i < rows; ++i) reduced[j][i] = ((columns[j][i] % p) + p) % p;
  }
  const uint32_t total = uint32_t{1} << m;
  std::vector<uint8_t> table(total);
  std::vector<std::vector<int>> work;
  for (uint32_t s = 1; s < total; ++s) {
    work.clear();
    for (uint32_t b = s; b != 0; b &= b - 1) work.push_back(reduced[std::countr_zero(b)]);
    // Row-reduce the chosen columns (stored as rows of `work`).
    int rank = 0;
    for (size_t col = 0; col < rows && rank < static_cast<int>(work.size()); ++col) {
      int pivot = -1;
      for (size_t i = rank; i < work.size(); ++i) {
        if (work[i][col] != 0) {
          pivot = static_cast<int>(i);
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(work[rank], work[pivot]);
      // In GF(2) and GF(3) every nonzero element is its own inverse.
      const int inv = work[rank][col];
      for (size_t c = 0; c < rows; ++c) work[rank][c] = (work[rank][c] * inv) % p;
      for (size_t i = 0; i < work.size(); ++i) {
        if (static_cast<int>(i) == rank || work[i][col] == 0) continue;
        const int factor = work[i][col];
        for (size_t c = 0; c < rows; ++c) {
          work[i][c] = ((work[i][c] - factor * work[rank][c]) % p + p) % p;
        }
      }
      ++rank;
    }
    table[s] = static_cast<uint8_t>(rank);
  }
  return Matroid::FromRankTable(m, std::move(table));
}

Matroid Wheel(int r) {
  if (r < 2) throw MatroidError(ErrorCode::kBadParameters, "wheel needs r >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= r; ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= r; ++i) edges.emplace_back(i, i % r + 1);
  return FromGraph(edges);
}

ElementSet WheelRim(int r) {
  return ElementSet(((uint32_t{1} << r) - 1) << r);
}

Matroid Whirl(int r) { return Relax(Wheel(r), WheelRim(r)); }

namespace {

Matroid BuildP7() {
  // Rank-3 tipped spike with the two disjoint traversals {x1,x2,x3} and
  // {y1,y2,y3}: five 3-point lines, three of them through the tip.
  return Spike({.rank = 3, .tip_class_size = 1, .traversals = {0b000, 0b111}});
}

Matroid BuildP8() {
  const std::vector<std::vector<int>> a = {
      {0, 1, 1, -1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {-1, 1, 1, 0}};
  std::vector<std::vector<int>> columns;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> unit(4, 0);
    unit[i] = 1;
    columns.push_back(unit);
  }
  for (int j = 0; j < 4; ++j) {
    columns.push_back({a[0][j], a[1][j], a[2][j], a[3][j]});
  }
  Matroid candidate = FromMatrixGF(3, columns);
  if (!PassesP8Characterization(candidate)) {
    throw MatroidError(ErrorCode::kP8CertificationFailure,
                       "GF(3) candidate fails the single-element minor test");
  }
  return candidate;
}

Matroid BuildAG23DeleteE() {
  std::vector<std::vector<int>> columns;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) columns.push_back({1, a, b});
  }
  columns.erase(columns.begin());
  return FromMatrixGF(3, columns);
}

Matroid BuildF7() {
  std::vector<std::vector<int>> columns;
  for (int v = 1; v < 8; ++v) columns.push_back({v & 1, (v >> 1) & 1, (v >> 2) & 1});
  return FromMatrixGF(2, columns);
}

// Spoke triangle {s1, s2, rim(1,2)} of the rank-3 wheel.
constexpr ElementSet kWheel3Triangle{0, 1, 3};

}  // namespace

bool PassesP8Characterization(const Matroid& m) {
  if (m.size() != 8 || m.rank() != 4) return false;
  const Matroid p7 = BuildP7();
  const Matroid p7_dual = Dual(p7);
  for (int e = 0; e < m.size(); ++e) {
    const ElementSet single = ElementSet::Single(e);
    if (!AreIsomorphic(Delete(m, single), p7_dual)) return false;
    if (!AreIsomorphic(Contract(m, single), p7)) return false;
  }
  return true;
}

Matroid Named(std::string_view name) {
  if (name == "P7") return BuildP7();
  if (name == "P7minus" || name == "P7-") {
    return Relax(BuildP7(), SpikeLeg(0).With(6));
  }
  if (name == "P7doubleminus" || name == "P7=") {
    return Relax(Relax(BuildP7(), SpikeLeg(0).With(6)), SpikeLeg(1).With(6));
  }
  if (name == "P8") return BuildP8();
  if (name == "O7") return PrincipalExtension(Wheel(3), kWheel3Triangle);
  if (name == "O7minus" || name == "O7-") {
    return PrincipalExtension(Whirl(3), kWheel3Triangle);
  }
  if (name == "AG23_del_e" || name == "AG23e") return BuildAG23DeleteE();
  if (name == "F7") return BuildF7();
  if (name == "F7dual" || name == "F7*") return Dual(BuildF7());
  if (name == "MW3") return Wheel(3);
  if (name == "MW4") return Wheel(4);
  if (name == "W3") return Whirl(3);
  if (name == "W4") return Whirl(4);
  throw MatroidError(ErrorCode::kUnknownName, "no named matroid '" +
                                                  std::string(name) + "'");
}

std::vector<std::string> NamedMatroidNames() {
  return {"P7", "P7minus", "P7doubleminus", "P8",  "O7",  "O7minus", "AG23_del_e",
          "F7", "F7dual",  "MW3",           "MW4", "W3",  "W4"};
}

}  // namespace spikelab
