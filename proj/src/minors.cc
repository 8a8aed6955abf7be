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

#include "spikelab/minors.h"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "spikelab/error.h"

namespace spikelab {
namespace {

int LoopCount(const Matroid& m) { return Loops(m).size(); }

// Next mask with the same popcount (Gosper).
uint32_t NextCombination(uint32_t x) {
  const uint32_t c = x & -x;
  const uint32_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

template <typename F>
void ForEachCombination(int n, int k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    f(uint32_t{0});
    return;
  }
  const uint32_t limit = uint32_t{1} << n;
  for (uint32_t x = (uint32_t{1} << k) - 1; x < limit; x = NextCombination(x)) {
    if (!f(x)) return;
  }
}

// Rank table of (host / c) | x in compact labels; x and c are disjoint host
// masks. Submasks of x enumerated in increasing order are exactly the compact
// indices 0, 1, 2, ...
Matroid RestrictedContraction(const Matroid& host, uint32_t x, uint32_t c) {
  const int k = std::popcount(x);
  std::vector<uint8_t> table(size_t{1} << k);
  const int rc = host.RankOf(c);
  size_t index = 0;
  uint32_t s = 0;
  while (true) {
    table[index++] = static_cast<uint8_t>(host.RankOf(s | c) - rc);
    if (s == x) break;
    s = (s - x) & x;
  }
  return Matroid::FromRankTable(k, std::move(table));
}

}  // namespace

MinorPattern::MinorPattern(Matroid pattern)
    : matroid_(std::move(pattern)),
      form_(ComputeCanonicalForm(matroid_)),
      signature_(ComputeSignature(matroid_)),
      loops_(LoopCount(matroid_)) {}

std::optional<MinorWitness> FindMinor(const Matroid& host,
                                      const MinorPattern& pattern) {
  const Matroid& p = pattern.matroid();
  const int n = host.size();
  const int r = host.rank();
  if (p.size() > n || p.rank() > r || p.corank() > host.corank()) {
    return std::nullopt;
  }
  const int k = r - p.rank();
  const int keep = p.size();
  const uint32_t full = host.ground().bits();

  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::optional<MinorWitness> found;
  ForEachCombination(n, k, [&](uint32_t c) {
    if (host.RankOf(c) != k) return true;
    const uint32_t rest = full & ~c;
    // Duplicate contractions up to isomorphism cannot produce new minors.
    if (k > 0 && !seen.insert(ComputeCanonicalForm(
                                  RestrictedContraction(host, rest, c)))
                      .second) {
      return true;
    }
    uint32_t loops = 0;
    for (uint32_t b = rest; b != 0; b &= b - 1) {
      const uint32_t e = b & -b;
      if (host.RankOf(c | e) == k) loops |= e;
    }
    if (std::popcount(loops) < pattern.loops()) return true;

    const std::vector<int> spread = ElementSet(rest).elements();
    const int free_count = static_cast<int>(spread.size());
    ForEachCombination(free_count, keep, [&](uint32_t local) {
      uint32_t x = 0;
      for (uint32_t b = local; b != 0; b &= b - 1) {
        x |= uint32_t{1} << spread[std::countr_zero(b)];
      }
      if (std::popcount(x & loops) != pattern.loops()) return true;
      if (host.RankOf(x | c) != r) return true;  // deleted set must be coindependent
      const Matroid candidate = RestrictedContraction(host, x, c);
      if (!(ComputeSignature(candidate) == pattern.signature())) return true;
      if (ComputeCanonicalForm(candidate) != pattern.form()) return true;
      const std::vector<int> iso = *FindIsomorphism(p, candidate);
      const std::vector<int> host_of_local = ElementSet(x).elements();
      MinorWitness w;
      w.contracted = ElementSet(c);
      w.deleted = ElementSet(rest & ~x);
      w.element_map.resize(p.size());
      for (int i = 0; i < p.size(); ++i) w.element_map[i] = host_of_local[iso[i]];
      found = std::move(w);
      return false;
    });
    return !found.has_value();
  });
  return found;
}

std::optional<MinorWitness> HasMinor(const Matroid& host, const Matroid& pattern) {
  return FindMinor(host, MinorPattern(pattern));
}

std::vector<CanonicalForm> AllMinors(const Matroid& host, bool up_to_iso) {
  if (host.size() > kAllMinorsLimit) {
    throw MatroidError(ErrorCode::kCapacityGuard,
                       "minor enumeration is limited to " +
                           std::to_string(kAllMinorsLimit) + " elements");
  }
  const uint32_t full = host.ground().bits();
  const int r = host.rank();
  std::vector<CanonicalForm> out;
  if (up_to_iso) {
    // Closure under single-element deletion and contraction.
    std::set<CanonicalForm> found;
    std::vector<Matroid> frontier = {host};
    found.insert(ComputeCanonicalForm(host));
    while (!frontier.empty()) {
      std::vector<Matroid> next;
      for (const Matroid& m : frontier) {
        for (int e = 0; e < m.size(); ++e) {
          const ElementSet single = ElementSet::Single(e);
          for (Matroid child : {Delete(m, single), Contract(m, single)}) {
            if (found.insert(ComputeCanonicalForm(child)).second) {
              next.push_back(std::move(child));
            }
          }
        }
      }
      frontier = std::move(next);
    }
    out.assign(found.begin(), found.end());
    return out;
  }
  ForEachSubset(ElementSet(full), [&](ElementSet c) {
    if (host.RankOf(c.bits()) != c.size()) return;
    ForEachSubset(ElementSet(full & ~c.bits()), [&](ElementSet d) {
      if (host.RankOf(full & ~d.bits()) != r) return;
      const uint32_t keep = full & ~c.bits() & ~d.bits();
      out.push_back(
          ComputeCanonicalForm(RestrictedContraction(host, keep, c.bits())));
    });
  });
  return out;
}

}  // namespace spikelab
