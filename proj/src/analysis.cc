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

#include "spikelab/analysis.h"

#include <bit>

#include "spikelab/error.h"
#include "spikelab/transforms.h"

namespace spikelab {

int Connectivity(const Matroid& m, ElementSet x) {
  const ElementSet rest = m.ground() - x;
  return m.rank(x) + m.rank(rest) - m.rank();
}

std::optional<ElementSet> FindSeparation(const Matroid& m, int j) {
  const int n = m.size();
  if (n < 2 * j) return std::nullopt;
  const uint32_t full = m.ground().bits();
  const uint32_t half = uint32_t{1} << (n - 1);
  const int r = m.rank();
  for (uint32_t x = 0; x < half; ++x) {
    const int size = std::popcount(x);
    if (size < j || n - size < j) continue;
    if (m.RankOf(x) + m.RankOf(full & ~x) - r <= j - 1) return ElementSet(x);
  }
  return std::nullopt;
}

bool IsKConnected(const Matroid& m, int k) {
  if (k < 1 || k > 3) {
    throw MatroidError(ErrorCode::kBadParameters,
                       "connectivity order must be 1, 2 or 3");
  }
  for (int j = 1; j < k; ++j) {
    if (FindSeparation(m, j)) return false;
  }
  return true;
}

std::vector<ElementSet> Triangles(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet c : Circuits(m)) {
    if (c.size() == 3) out.push_back(c);
  }
  return out;
}

std::vector<ElementSet> Triads(const Matroid& m) { return Triangles(Dual(m)); }

RemovableSets Removable(const Matroid& m) {
  RemovableSets out;
  for (int e = 0; e < m.size(); ++e) {
    const ElementSet single = ElementSet::Single(e);
    if (IsThreeConnected(Delete(m, single))) out.deletable = out.deletable.With(e);
    if (IsThreeConnected(Contract(m, single))) {
      out.contractible = out.contractible.With(e);
    }
  }
  return out;
}

}  // namespace spikelab
