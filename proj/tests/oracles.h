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


// Brute-force reference implementations. They share nothing with the library
// beyond the Matroid container and are only usable at tiny sizes.

#ifndef SPIKELAB_TESTS_ORACLES_H_
#define SPIKELAB_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "spikelab/matroid.h"

namespace oracle {

using spikelab::Matroid;

inline std::vector<uint8_t> RankTableFromBases(int n, const std::vector<uint32_t>& bases) {
  std::vector<uint8_t> table(size_t{1} << n, 0);
  for (uint32_t s = 0; s < table.size(); ++s) {
    int best = 0;
    for (uint32_t b : bases) best = std::max(best, std::popcount(s & b));
    table[s] = static_cast<uint8_t>(best);
  }
  return table;
}

inline Matroid FromBasesBrute(int n, const std::vector<uint32_t>& bases) {
  return Matroid::FromRankTable(n, RankTableFromBases(n, bases));
}

// Basis exchange over every ordered pair and every element.
inline bool SatisfiesExchange(const std::vector<uint32_t>& bases) {
  std::set<uint32_t> family(bases.begin(), bases.end());
  for (uint32_t a : bases) {
    for (uint32_t b : bases) {
      for (uint32_t x = a & ~b; x; x &= x - 1) {
        const uint32_t e = x & -x;
        bool ok = false;
        for (uint32_t y = b & ~a; y && !ok; y &= y - 1) {
          ok = family.contains((a & ~e) | (y & -y));
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// Rank tables of every labeled matroid on n elements (n <= 5).
inline std::vector<Matroid> AllLabeledMatroids(int n) {
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<uint32_t> subsets;
    for (uint32_t s = 0; s < (uint32_t{1} << n); ++s) {
      if (std::popcount(s) == r) subsets.push_back(s);
    }
    for (uint64_t pick = 1; pick < (uint64_t{1} << subsets.size()); ++pick) {
      std::vector<uint32_t> bases;
      for (size_t i = 0; i < subsets.size(); ++i) {
        if ((pick >> i) & 1u) bases.push_back(subsets[i]);
      }
      if (SatisfiesExchange(bases)) out.push_back(FromBasesBrute(n, bases));
    }
  }
  return out;
}

inline uint32_t Permute(uint32_t s, const std::vector<int>& p) {
  uint32_t out = 0;
  for (uint32_t x = s; x; x &= x - 1) out |= uint32_t{1} << p[std::countr_zero(x)];
  return out;
}

// Tries every permutation.
inline bool Isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  const int n = a.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (uint32_t s = 0; s < (uint32_t{1} << n) && same; ++s) {
      same = a.RankOf(s) == b.RankOf(Permute(s, p));
    }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::vector<Matroid> DedupeByIsomorphism(const std::vector<Matroid>& ms) {
  std::vector<Matroid> classes;
  for (const Matroid& m : ms) {
    bool seen = false;
    for (const Matroid& c : classes) {
      if (Isomorphic(m, c)) {
        seen = true;
        break;
      }
    }
    if (!seen) classes.push_back(m);
  }
  return classes;
}

// r(X) in M/C\D for X inside the surviving ground set, renumbered densely.
inline Matroid MinorBrute(const Matroid& m, uint32_t c, uint32_t d) {
  std::vector<int> keep;
  for (int e = 0; e < m.size(); ++e) {
    if (!((c | d) >> e & 1u)) keep.push_back(e);
  }
  const int k = static_cast<int>(keep.size());
  std::vector<uint8_t> table(size_t{1} << k);
  for (uint32_t s = 0; s < table.size(); ++s) {
    uint32_t x = 0;
    for (int i = 0; i < k; ++i) {
      if ((s >> i) & 1u) x |= uint32_t{1} << keep[i];
    }
    table[s] = static_cast<uint8_t>(m.RankOf(x | c) - m.RankOf(c));
  }
  return Matroid::FromRankTable(k, table);
}

// Every minor over all disjoint (C, D), deduplicated up to isomorphism.
inline std::vector<Matroid> AllMinorsBrute(const Matroid& m) {
  std::vector<Matroid> all;
  const uint32_t full = (uint32_t{1} << m.size()) - 1;
  for (uint32_t c = 0; c <= full; ++c) {
    const uint32_t rest = full & ~c;
    for (uint32_t d = rest;; d = (d - 1) & rest) {
      all.push_back(MinorBrute(m, c, d));
      if (d == 0) break;
    }
  }
  return DedupeByIsomorphism(all);
}

inline bool HasMinorBrute(const Matroid& host, const Matroid& pattern) {
  const uint32_t full = (uint32_t{1} << host.size()) - 1;
  const int remove = host.size() - pattern.size();
  if (remove < 0) return false;
  for (uint32_t cd = 0; cd <= full; ++cd) {
    if (std::popcount(cd) != remove) continue;
    for (uint32_t c = cd;; c = (c - 1) & cd) {
      if (Isomorphic(MinorBrute(host, c, cd & ~c), pattern)) return true;
      if (c == 0) break;
    }
  }
  return false;
}

// Rank of a set of columns over GF(p), columns given as digit vectors.
inline int RankGF(int p, std::vector<std::vector<int>> rows) {
  int rank = 0;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    int inv = 1;
    while (rows[rank][c] * inv % p != 1) ++inv;
    for (int& v : rows[rank]) v = v * inv % p;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Searches every matrix [I_r | A] over GF(p) with the identity on the
// lexicographically first basis. Exponential; for n <= 6 only.
inline bool RepresentableBrute(const Matroid& m, int p) {
  const int n = m.size();
  const int r = m.rank();
  if (r == 0) return true;
  uint32_t basis = 0;
  for (int e = 0; e < n; ++e) {
    if (m.RankOf(basis | (uint32_t{1} << e)) > std::popcount(basis)) basis |= uint32_t{1} << e;
  }
  std::vector<int> others;
  std::vector<int> position(n, -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    if ((basis >> e) & 1u) {
      position[e] = next++;
    } else {
      others.push_back(e);
    }
  }
  const int free_entries = r * static_cast<int>(others.size());
  uint64_t total = 1;
  for (int i = 0; i < free_entries; ++i) total *= p;
  std::vector<int> digits(free_entries);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (int& d : digits) {
      d = static_cast<int>(c % p);
      c /= p;
    }
    // columns[e] as a vector of r entries.
    std::vector<std::vector<int>> columns(n, std::vector<int>(r, 0));
    for (int e = 0; e < n; ++e) {
      if (position[e] >= 0) columns[e][position[e]] = 1;
    }
    for (size_t j = 0; j < others.size(); ++j) {
      for (int i = 0; i < r; ++i) columns[others[j]][i] = digits[j * r + i];
    }
    bool match = true;
    for (uint32_t s = 0; s < (uint32_t{1} << n) && match; ++s) {
      std::vector<std::vector<int>> rows(r);
      for (int i = 0; i < r; ++i) {
        for (int e = 0; e < n; ++e) {
          if ((s >> e) & 1u) rows[i].push_back(columns[e][i]);
        }
      }
      match = RankGF(p, rows) == m.RankOf(s);
    }
    if (match) return true;
  }
  return false;
}

// Circuits straight from the definition.
inline std::vector<uint32_t> CircuitsBrute(const Matroid& m) {
  std::vector<uint32_t> out;
  for (uint32_t s = 1; s < (uint32_t{1} << m.size()); ++s) {
    if (m.RankOf(s) != std::popcount(s) - 1) continue;
    bool minimal = true;
    for (uint32_t x = s; x && minimal; x &= x - 1) {
      const uint32_t t = s & ~(x & -x);
      minimal = m.RankOf(t) == std::popcount(t);
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// Tutte k-connectivity from the separation definition.
inline bool KConnectedBrute(const Matroid& m, int k) {
  const uint32_t full = (uint32_t{1} << m.size()) - 1;
  for (uint32_t x = 0; x <= full; ++x) {
    const uint32_t y = full & ~x;
    const int lambda = m.RankOf(x) + m.RankOf(y) - m.rank();
    for (int j = 1; j < k; ++j) {
      if (std::popcount(x) >= j && std::popcount(y) >= j && lambda < j) return false;
    }
  }
  return true;
}

}  // namespace oracle

#endif  // SPIKELAB_TESTS_ORACLES_H_
