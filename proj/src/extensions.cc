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

#include "spikelab/extensions.h"

#include <algorithm>
#include <bit>
#include <functional>

#include "spikelab/error.h"

namespace spikelab {

// Modular cuts other than the empty one correspond to linear subclasses of
// hyperplanes: sets H such that, over every coline, H holds none, exactly
// one, or all of the hyperplanes containing it. The cut is the set of flats
// all of whose covering hyperplanes lie in H.
std::vector<ModularCut> ModularCuts(const Matroid& m) {
  const int r = m.rank();
  const std::vector<ElementSet> flats = AllFlats(m);
  std::vector<ElementSet> hyperplanes;
  std::vector<ElementSet> colines;
  for (ElementSet f : flats) {
    const int rf = m.RankOf(f.bits());
    if (rf == r - 1) hyperplanes.push_back(f);
    if (rf == r - 2) colines.push_back(f);
  }
  const int h = static_cast<int>(hyperplanes.size());
  // Constraint groups: hyperplanes over each coline with at least three.
  std::vector<std::vector<int>> groups;
  for (ElementSet l : colines) {
    std::vector<int> over;
    for (int i = 0; i < h; ++i) {
      if (l.IsSubsetOf(hyperplanes[i])) over.push_back(i);
    }
    if (over.size() >= 3) groups.push_back(std::move(over));
  }
  std::vector<std::vector<int>> groups_of(h);
  for (size_t g = 0; g < groups.size(); ++g) {
    for (int i : groups[g]) groups_of[i].push_back(static_cast<int>(g));
  }
  std::vector<std::vector<int>> above(flats.size());
  for (size_t f = 0; f < flats.size(); ++f) {
    for (int i = 0; i < h; ++i) {
      if (flats[f].IsSubsetOf(hyperplanes[i])) above[f].push_back(i);
    }
  }

  std::vector<ModularCut> out;
  out.push_back({});  // the coloop extension
  std::vector<signed char> state(h, -1);  // -1 undecided, 0 out, 1 in
  std::vector<int> trail;

  // Assigns and propagates; returns false on a contradiction.
  std::function<bool(int, signed char)> assign = [&](int i, signed char v) {
    if (state[i] != -1) return state[i] == v;
    state[i] = v;
    trail.push_back(i);
    for (int g : groups_of[i]) {
      int in = 0, outs = 0;
      for (int j : groups[g]) {
        if (state[j] == 1) ++in;
        if (state[j] == 0) ++outs;
      }
      if (in >= 2 && outs >= 1) return false;
      if (in >= 2 || (in == 1 && outs >= 1)) {
        const signed char forced = in >= 2 ? 1 : 0;
        for (int j : groups[g]) {
          if (state[j] == -1 && !assign(j, forced)) return false;
        }
      }
    }
    return true;
  };
  auto undo = [&](size_t mark) {
    while (trail.size() > mark) {
      state[trail.back()] = -1;
      trail.pop_back();
    }
  };
  std::function<void(int)> search = [&](int i) {
    while (i < h && state[i] != -1) ++i;
    if (i == h) {
      ModularCut cut;
      for (size_t f = 0; f < flats.size(); ++f) {
        bool all = true;
        for (int j : above[f]) {
          if (state[j] != 1) {
            all = false;
            break;
          }
        }
        if (all) cut.push_back(flats[f]);
      }
      std::sort(cut.begin(), cut.end());
      out.push_back(std::move(cut));
      return;
    }
    for (signed char v : {0, 1}) {
      const size_t mark = trail.size();
      if (assign(i, v)) search(i + 1);
      undo(mark);
    }
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

Matroid ExtendByCut(const Matroid& m, const ModularCut& cut) {
  const int n = m.size();
  if (n + 1 > kMaxElements) {
    throw MatroidError(ErrorCode::kCapacityExceeded, "extension exceeds capacity");
  }
  const uint32_t half = uint32_t{1} << n;
  std::vector<char> in_cut(half, 0);
  for (ElementSet f : cut) in_cut[f.bits()] = 1;
  std::vector<uint8_t> table(half * 2);
  for (uint32_t s = 0; s < half; ++s) {
    const int r = m.RankOf(s);
    table[s] = static_cast<uint8_t>(r);
    table[s | half] = static_cast<uint8_t>(in_cut[m.Closure(ElementSet(s)).bits()] ? r : r + 1);
  }
  return Matroid::FromRankTable(n + 1, std::move(table));
}

std::vector<Matroid> SingleElementExtensions(const Matroid& m) {
  if (m.size() > kExtensionLimit) {
    throw MatroidError(ErrorCode::kCapacityGuard,
                       "extensions are limited to " + std::to_string(kExtensionLimit) +
                           " elements");
  }
  std::vector<Matroid> out;
  for (const ModularCut& cut : ModularCuts(m)) {
    Matroid ext = ExtendByCut(m, cut);
    if (AxiomReport report = ValidateAxioms(ext); !report.valid) {
      throw MatroidError(ErrorCode::kBadParameters,
                         "modular cut produced an invalid extension (" +
                             report.first_violation->axiom + ")");
    }
    out.push_back(std::move(ext));
  }
  return out;
}

}  // namespace spikelab
