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

#include "spikelab/spike.h"

#include <algorithm>
#include <bit>
#include <functional>

#include "spikelab/analysis.h"
#include "spikelab/catalog.h"
#include "spikelab/error.h"
#include "spikelab/minors.h"

namespace spikelab {
namespace {

bool IsCircuitMask(const Matroid& m, uint32_t s) {
  const int k = std::popcount(s);
  if (m.RankOf(s) != k - 1) return false;
  for (uint32_t b = s; b != 0; b &= b - 1) {
    if (m.RankOf(s & ~(b & -b)) != k - 1) return false;
  }
  return true;
}

// True when rank_a(S) = rank_b(map(S)) for every S, map sending a to b.
bool SameUnderMap(const Matroid& a, const Matroid& b, const std::vector<int>& map) {
  const uint32_t total = uint32_t{1} << a.size();
  std::vector<uint32_t> image(total, 0);
  for (uint32_t s = 1; s < total; ++s) {
    image[s] = image[s & (s - 1)] | (uint32_t{1} << map[std::countr_zero(s)]);
    if (a.RankOf(s) != b.RankOf(image[s])) return false;
  }
  return true;
}

std::vector<ElementSet> SortedLegs(std::vector<ElementSet> legs) {
  std::sort(legs.begin(), legs.end(),
            [](ElementSet x, ElementSet y) { return x.front() < y.front(); });
  return legs;
}

int64_t Binomial(int n, int k) {
  int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

std::optional<std::vector<ElementSet>> RecognizeTiplessSpike(const Matroid& m) {
  const int r = m.rank();
  if (r < 3 || m.size() != 2 * r) return std::nullopt;
  const Matroid dual = Dual(m);
  std::vector<ElementSet> legs;
  std::function<bool(uint32_t)> search = [&](uint32_t left) {
    if (left == 0) return true;
    const int a = std::countr_zero(left);
    for (uint32_t rest = left & (left - 1); rest != 0; rest &= rest - 1) {
      const uint32_t pair = (uint32_t{1} << a) | (rest & -rest);
      bool ok = true;
      for (ElementSet leg : legs) {
        const uint32_t u = leg.bits() | pair;
        if (!IsCircuitMask(m, u) || !IsCircuitMask(dual, u)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      legs.push_back(ElementSet(pair));
      if (search(left & ~pair)) return true;
      legs.pop_back();
    }
    return false;
  };
  if (!search(m.ground().bits())) return std::nullopt;
  return legs;
}

std::optional<TippedSpikeShape> RecognizeTippedSpike(const Matroid& m) {
  const int r = m.rank();
  const int n = m.size();
  if (r < 3 || n != 2 * r + 1) return std::nullopt;
  for (int t = 0; t < n; ++t) {
    const uint32_t tb = uint32_t{1} << t;
    std::vector<ElementSet> legs;
    uint32_t covered = 0;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const uint32_t pair = (uint32_t{1} << a) | (uint32_t{1} << b);
        if (a == t || b == t || !IsCircuitMask(m, pair | tb)) continue;
        if (covered & pair) {
          ok = false;
          break;
        }
        covered |= pair;
        legs.push_back(ElementSet(pair));
      }
    }
    if (!ok || static_cast<int>(legs.size()) != r) continue;

    // Model comparison: traversals are the dependent transversals.
    SpikeSpec spec{.rank = r, .tip_class_size = 1, .traversals = {}};
    std::vector<int> map(2 * r + 1);
    for (int i = 0; i < r; ++i) {
      const std::vector<int> leg = legs[i].elements();
      map[SpikeX(i)] = leg[0];
      map[SpikeY(i)] = leg[1];
    }
    map[SpikeTip(spec)] = t;
    for (uint32_t choice = 0; choice < (uint32_t{1} << r); ++choice) {
      uint32_t s = 0;
      for (int i = 0; i < r; ++i) {
        s |= uint32_t{1} << map[(choice >> i) & 1u ? SpikeY(i) : SpikeX(i)];
      }
      if (m.RankOf(s) < r) spec.traversals.push_back(choice);
    }
    try {
      if (SameUnderMap(Spike(spec), m, map)) return TippedSpikeShape{t, legs};
    } catch (const MatroidError&) {
      // Illegal traversal pair: not a spike with this tip.
    }
  }
  return std::nullopt;
}

std::optional<TipCotipShape> RecognizeTipCotip(const Matroid& m) {
  const int n = m.size();
  if (n < 6 || n % 2 != 0) return std::nullopt;
  const Matroid dual = Dual(m);
  for (int t = 0; t < n; ++t) {
    for (int c = 0; c < n; ++c) {
      if (c == t) continue;
      const uint32_t tb = uint32_t{1} << t;
      const uint32_t cb = uint32_t{1} << c;
      std::vector<ElementSet> legs;
      std::function<bool(uint32_t)> search = [&](uint32_t left) {
        if (left == 0) return true;
        const int a = std::countr_zero(left);
        for (uint32_t rest = left & (left - 1); rest != 0; rest &= rest - 1) {
          const uint32_t pair = (uint32_t{1} << a) | (rest & -rest);
          if (!IsCircuitMask(m, pair | tb) || !IsCircuitMask(dual, pair | cb)) {
            continue;
          }
          legs.push_back(ElementSet(pair));
          if (search(left & ~pair)) return true;
          legs.pop_back();
        }
        return false;
      };
      if (search(m.ground().bits() & ~tb & ~cb)) return TipCotipShape{t, c, legs};
    }
  }
  return std::nullopt;
}

std::optional<SpikeEmbedding> EmbedAsSpikeRestriction(const Matroid& m) {
  const int r = m.rank();
  if (r < 3) {
    throw MatroidError(ErrorCode::kRankTooSmall,
                       "spike restrictions need rank >= 3, got " + std::to_string(r));
  }
  if (!Loops(m).empty()) return std::nullopt;
  const int n = m.size();

  // A restriction of the model agrees with m iff their circuits of size at
  // most r agree; the rest are the (r+1)-sets free of smaller circuits.
  std::vector<uint32_t> small;
  for (ElementSet c : Circuits(m)) {
    if (c.size() <= r) small.push_back(c.bits());
  }
  std::sort(small.begin(), small.end());

  std::vector<ElementSet> tip_options = {ElementSet()};
  for (ElementSet cls : ParallelClasses(m)) tip_options.push_back(cls);

  std::optional<SpikeEmbedding> found;
  auto try_blocks = [&](ElementSet tip, const std::vector<ElementSet>& blocks) {
    std::vector<uint32_t> listed;
    const std::vector<int> tips = tip.elements();
    for (size_t i = 0; i < tips.size(); ++i) {
      for (size_t j = i + 1; j < tips.size(); ++j) {
        listed.push_back((uint32_t{1} << tips[i]) | (uint32_t{1} << tips[j]));
      }
    }
    std::vector<ElementSet> full;
    for (ElementSet b : blocks) {
      if (b.size() == 2) full.push_back(b);
    }
    for (int t : tips) {
      for (ElementSet leg : full) listed.push_back(leg.With(t).bits());
    }
    if (r >= 4) {
      for (size_t i = 0; i < full.size(); ++i) {
        for (size_t j = i + 1; j < full.size(); ++j) {
          listed.push_back((full[i] | full[j]).bits());
        }
      }
    }
    std::vector<ElementSet> traversals;
    if (static_cast<int>(blocks.size()) == r) {
      for (uint32_t c : small) {
        if (std::popcount(c) != r) continue;
        bool transversal = true;
        for (ElementSet b : blocks) {
          if ((ElementSet(c) & b).size() != 1) {
            transversal = false;
            break;
          }
        }
        if (!transversal) continue;
        for (ElementSet other : traversals) {
          if ((other & ElementSet(c)).size() > r - 2) return false;
        }
        traversals.push_back(ElementSet(c));
        listed.push_back(c);
      }
    }
    if (listed.size() != small.size()) return false;
    std::sort(listed.begin(), listed.end());
    if (listed != small) return false;
    found = SpikeEmbedding{tip, SortedLegs(blocks), r, traversals};
    return true;
  };

  for (ElementSet tip : tip_options) {
    const uint32_t rest = m.ground().bits() & ~tip.bits();
    if (std::popcount(rest) > 2 * r) continue;
    if (!tip.empty()) {
      // Full legs are forced: the pairs forming triangles with the tip.
      const uint32_t tb = uint32_t{1} << tip.front();
      std::vector<ElementSet> blocks;
      uint32_t covered = 0;
      bool ok = true;
      for (uint32_t a = rest; a != 0 && ok; a &= a - 1) {
        for (uint32_t b = (a & (a - 1)); b != 0; b &= b - 1) {
          const uint32_t pair = (a & -a) | (b & -b);
          if (!IsCircuitMask(m, pair | tb)) continue;
          if (covered & pair) {
            ok = false;
            break;
          }
          covered |= pair;
          blocks.push_back(ElementSet(pair));
        }
      }
      if (!ok) continue;
      for (uint32_t a = rest & ~covered; a != 0; a &= a - 1) {
        blocks.push_back(ElementSet(a & -a));
      }
      if (static_cast<int>(blocks.size()) <= r && try_blocks(tip, blocks)) break;
      continue;
    }
    // No tip visible: search partitions into at most r blocks.
    std::vector<ElementSet> blocks;
    std::function<bool(uint32_t)> search = [&](uint32_t left) {
      if (left == 0) return try_blocks(tip, blocks);
      const int slots = r - static_cast<int>(blocks.size());
      if (std::popcount(left) > 2 * slots) return false;
      const uint32_t a = left & -left;
      for (uint32_t rest2 = left & ~a; rest2 != 0; rest2 &= rest2 - 1) {
        const uint32_t pair = a | (rest2 & -rest2);
        if (m.RankOf(pair) != 2) continue;
        bool ok = true;
        for (ElementSet b : blocks) {
          if (b.size() == 2 && !IsCircuitMask(m, b.bits() | pair)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        blocks.push_back(ElementSet(pair));
        if (search(left & ~pair)) return true;
        blocks.pop_back();
      }
      blocks.push_back(ElementSet(a));
      if (search(left & ~a)) return true;
      blocks.pop_back();
      return false;
    };
    if (n <= 2 * r && search(rest)) break;
  }
  return found;
}

std::string_view StructuralCaseName(StructuralCase c) {
  switch (c) {
    case StructuralCase::kNone: return "none";
    case StructuralCase::kRankZero: return "rank-0";
    case StructuralCase::kRankOne: return "rank-1";
    case StructuralCase::kRankTwo: return "rank-2";
    case StructuralCase::kDoubledUniform: return "doubled-uniform";
    case StructuralCase::kSpikeRestriction: return "spike-restriction";
  }
  return "?";
}

MembershipVerdict IsSpikeMinorStructural(const Matroid& m) {
  MembershipVerdict v;
  const int r = m.rank();
  const int loops = Loops(m).size();
  if (r == 0) {
    v.in_class = true;
    v.structural_case = StructuralCase::kRankZero;
    return v;
  }
  if (r == 1) {
    v.in_class = m.size() - loops <= 4 || loops <= 1;
    if (v.in_class) v.structural_case = StructuralCase::kRankOne;
    return v;
  }
  std::vector<int> sizes;
  for (ElementSet cls : ParallelClasses(m)) sizes.push_back(cls.size());
  std::sort(sizes.rbegin(), sizes.rend());
  const int k = static_cast<int>(sizes.size());
  auto s = [&sizes](int i) { return i < static_cast<int>(sizes.size()) ? sizes[i] : 0; };
  if (r == 2) {
    v.in_class = (k <= 3 && s(0) <= 2) ||
                 (loops == 0 && k <= 5 && s(1) <= 1) ||
                 (loops == 0 && k <= 4 && s(1) <= 2 && s(2) <= 1) ||
                 (loops == 0 && k <= 3 && s(1) <= 2);
    if (v.in_class) v.structural_case = StructuralCase::kRankTwo;
    return v;
  }
  if (k <= r + 1 && s(0) <= 2) {
    const Matroid si = Simplify(m).matroid;
    if (static_cast<int64_t>(Bases(si).size()) == Binomial(k, r)) {
      v.in_class = true;
      v.structural_case = StructuralCase::kDoubledUniform;
      return v;
    }
  }
  v.embedding = EmbedAsSpikeRestriction(m);
  v.in_class = v.embedding.has_value();
  if (v.in_class) v.structural_case = StructuralCase::kSpikeRestriction;
  return v;
}

namespace {

struct PatternList {
  std::vector<ListedMatroid> entries;
  std::vector<MinorPattern> patterns;
};

ListedMatroid Listed(std::string name, std::string expression, Matroid m) {
  return ListedMatroid{std::move(name), std::move(expression), std::move(m)};
}

Matroid ParallelUniform(int r, int n, std::vector<int> sizes) {
  return MultiParallelUniform(r, n, sizes);
}

std::vector<ListedMatroid> BuildSpikeList() {
  return {
      Listed("U15+U02", "dsum(U(1,5),U(0,2))", DirectSum(Uniform(1, 5), Uniform(0, 2))),
      Listed("U24+U01", "dsum(U(2,4),U(0,1))", DirectSum(Uniform(2, 4), Uniform(0, 1))),
      Listed("U13+U11+U01", "dsum(dsum(U(1,3),U(1,1)),U(0,1))",
             DirectSum(DirectSum(Uniform(1, 3), Uniform(1, 1)), Uniform(0, 1))),
      Listed("U26", "U(2,6)", Uniform(2, 6)),
      Listed("U13+U13", "dsum(U(1,3),U(1,3))", DirectSum(Uniform(1, 3), Uniform(1, 3))),
      Listed("{2}-U23+U12", "dsum(PU(2,3;2),U(1,2))",
             DirectSum(ParallelUniform(2, 3, {2}), Uniform(1, 2))),
      Listed("{2,2,2}-U24", "PU(2,4;2,2,2)", ParallelUniform(2, 4, {2, 2, 2})),
      Listed("{2,2}-U25", "PU(2,5;2,2)", ParallelUniform(2, 5, {2, 2})),
      Listed("P7-", "P7-", Named("P7minus")),
      Listed("P7=", "P7=", Named("P7doubleminus")),
      Listed("P8", "P8", Named("P8")),
  };
}

const PatternList& SpikePatterns() {
  static const PatternList list = [] {
    PatternList out;
    out.entries = BuildSpikeList();
    for (const ListedMatroid& e : out.entries) out.patterns.emplace_back(e.matroid);
    return out;
  }();
  return list;
}

}  // namespace

const std::vector<ListedMatroid>& SpikeExcludedMinors() {
  return SpikePatterns().entries;
}

const std::vector<ListedMatroid>& ThreeConnectedExcludedMinors() {
  static const std::vector<ListedMatroid> list = {
      Listed("U26", "U(2,6)", Uniform(2, 6)),
      Listed("O7", "O7", Named("O7")),
      Listed("O7-", "O7-", Named("O7minus")),
      Listed("P7-", "P7-", Named("P7minus")),
      Listed("P7=", "P7=", Named("P7doubleminus")),
      Listed("AG23e", "AG23e", Named("AG23_del_e")),
      Listed("P8", "P8", Named("P8")),
      Listed("MW4", "wheel(4)", Wheel(4)),
      Listed("W4", "whirl(4)", Whirl(4)),
  };
  return list;
}

const std::vector<ListedMatroid>& LowRankExcludedMinors() {
  static const std::vector<ListedMatroid> list = [] {
    std::vector<ListedMatroid> out;
    for (const ListedMatroid& e : SpikeExcludedMinors()) {
      if (e.matroid.rank() <= 3) out.push_back(e);
    }
    out.push_back(Listed("U24+U11", "dsum(U(2,4),U(1,1))",
                         DirectSum(Uniform(2, 4), Uniform(1, 1))));
    out.push_back(Listed("U23+U11+U01", "dsum(dsum(U(2,3),U(1,1)),U(0,1))",
                         DirectSum(DirectSum(Uniform(2, 3), Uniform(1, 1)),
                                   Uniform(0, 1))));
    return out;
  }();
  return list;
}

MembershipVerdict IsSpikeMinorExcluded(const Matroid& m) {
  MembershipVerdict v;
  const PatternList& list = SpikePatterns();
  const Matroid dual = Dual(m);
  for (size_t i = 0; i < list.patterns.size(); ++i) {
    for (bool in_dual : {false, true}) {
      if (auto w = FindMinor(in_dual ? dual : m, list.patterns[i])) {
        v.excluded = ExcludedMinorHit{list.entries[i].name, in_dual, std::move(*w)};
        return v;
      }
    }
  }
  v.in_class = true;
  return v;
}

bool IsInS3(const Matroid& m) {
  return IsThreeConnected(m) && IsSpikeMinorStructural(m).in_class;
}

bool IsMinimallyNotInS3(const Matroid& m) {
  if (!IsThreeConnected(m) || IsSpikeMinorStructural(m).in_class) return false;
  const CanonicalForm self = ComputeCanonicalForm(m);
  for (const CanonicalForm& form : AllMinors(m, true)) {
    if (form == self) continue;
    const Matroid minor = FromCanonicalForm(form);
    if (IsThreeConnected(minor) && !IsSpikeMinorStructural(minor).in_class) {
      return false;
    }
  }
  return true;
}

}  // namespace spikelab
