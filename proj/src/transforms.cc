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

#include "spikelab/transforms.h"

#include <bit>

#include "spikelab/error.h"

namespace spikelab {
namespace {

void CheckInside(const Matroid& m, ElementSet s) {
  if (!s.IsSubsetOf(m.ground())) {
    throw MatroidError(ErrorCode::kOutOfRangeElement,
                       s.ToString() + " not inside a ground set of size " +
                           std::to_string(m.size()),
                       {s});
  }
}

void CheckCapacity(int n) {
  if (n > kMaxElements) {
    throw MatroidError(ErrorCode::kCapacityExceeded,
                       std::to_string(n) + " elements exceed capacity " +
                           std::to_string(kMaxElements));
  }
}

// Rank table of M/c restricted to `keep` (keep and c disjoint).
Matroid MinorTable(const Matroid& m, ElementSet keep, ElementSet c) {
  const std::vector<int> map = keep.elements();
  const int k = static_cast<int>(map.size());
  const uint32_t total = uint32_t{1} << k;
  std::vector<uint32_t> expand(total, 0);
  std::vector<uint8_t> table(total, 0);
  const uint32_t cb = c.bits();
  const int rc = m.RankOf(cb);
  for (uint32_t s = 1; s < total; ++s) {
    expand[s] = expand[s & (s - 1)] | (uint32_t{1} << map[std::countr_zero(s)]);
  }
  for (uint32_t s = 0; s < total; ++s) {
    table[s] = static_cast<uint8_t>(m.RankOf(expand[s] | cb) - rc);
  }
  return Matroid::FromRankTable(k, std::move(table));
}

}  // namespace

Matroid Delete(const Matroid& m, ElementSet d) {
  CheckInside(m, d);
  return MinorTable(m, m.ground() - d, ElementSet());
}

Matroid Contract(const Matroid& m, ElementSet c) {
  CheckInside(m, c);
  return MinorTable(m, m.ground() - c, c);
}

Matroid Restrict(const Matroid& m, ElementSet keep) {
  CheckInside(m, keep);
  return MinorTable(m, keep, ElementSet());
}

std::pair<Matroid, MinorWitness> Minor(const Matroid& m, ElementSet c,
                                       ElementSet d) {
  CheckInside(m, c);
  CheckInside(m, d);
  if (!(c & d).empty()) {
    throw MatroidError(ErrorCode::kOverlappingSets,
                       c.ToString() + " meets " + d.ToString(), {c, d});
  }
  const ElementSet keep = m.ground() - c - d;
  MinorWitness w{c, d, keep.elements()};
  return {MinorTable(m, keep, c), std::move(w)};
}

Matroid Dual(const Matroid& m) {
  const int n = m.size();
  const uint32_t total = uint32_t{1} << n;
  const uint32_t full = total - 1;
  const int r = m.rank();
  std::vector<uint8_t> table(total);
  for (uint32_t s = 0; s < total; ++s) {
    table[s] = static_cast<uint8_t>(std::popcount(s) + m.RankOf(full & ~s) - r);
  }
  return Matroid::FromRankTable(n, std::move(table));
}

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  CheckCapacity(n);
  const uint32_t total = uint32_t{1} << n;
  const uint32_t low = a.ground().bits();
  std::vector<uint8_t> table(total);
  for (uint32_t s = 0; s < total; ++s) {
    table[s] = static_cast<uint8_t>(a.RankOf(s & low) + b.RankOf(s >> a.size()));
  }
  return Matroid::FromRankTable(n, std::move(table));
}

Matroid ParallelReplace(const Matroid& m, const std::map<int, int>& sizes) {
  const ElementSet loops = Loops(m);
  std::vector<int> source;  // result element -> source element
  for (int e = 0; e < m.size(); ++e) {
    int copies = 1;
    if (auto it = sizes.find(e); it != sizes.end()) {
      copies = it->second;
      if (copies < 1) {
        throw MatroidError(ErrorCode::kBadParameters,
                           "parallel class size must be at least 1");
      }
      if (copies > 1 && loops.contains(e)) {
        throw MatroidError(ErrorCode::kLoopTarget,
                           "element " + std::to_string(e) + " is a loop",
                           {ElementSet::Single(e)});
      }
    }
    for (int i = 0; i < copies; ++i) source.push_back(e);
  }
  for (const auto& [e, copies] : sizes) {
    if (e < 0 || e >= m.size()) {
      throw MatroidError(ErrorCode::kOutOfRangeElement,
                         "element " + std::to_string(e) + " out of range");
    }
  }
  const int n = static_cast<int>(source.size());
  CheckCapacity(n);
  const uint32_t total = uint32_t{1} << n;
  std::vector<uint32_t> image(total, 0);
  std::vector<uint8_t> table(total);
  for (uint32_t s = 1; s < total; ++s) {
    image[s] = image[s & (s - 1)] | (uint32_t{1} << source[std::countr_zero(s)]);
  }
  for (uint32_t s = 0; s < total; ++s) table[s] = static_cast<uint8_t>(m.RankOf(image[s]));
  return Matroid::FromRankTable(n, std::move(table));
}

Matroid PrincipalExtension(const Matroid& m, ElementSet flat) {
  CheckInside(m, flat);
  if (!m.IsFlat(flat)) {
    throw MatroidError(ErrorCode::kNotAFlat, flat.ToString() + " is not a flat",
                       {flat});
  }
  const int n = m.size() + 1;
  CheckCapacity(n);
  const uint32_t half = uint32_t{1} << m.size();
  const uint32_t fb = flat.bits();
  std::vector<uint8_t> table(half * 2);
  for (uint32_t s = 0; s < half; ++s) {
    table[s] = static_cast<uint8_t>(m.RankOf(s));
    const int with_new = std::min(m.RankOf(s) + 1, m.RankOf(s | fb));
    table[s | half] = static_cast<uint8_t>(with_new);
  }
  Matroid out = Matroid::FromRankTable(n, std::move(table));
  if (auto report = ValidateAxioms(out); !report.valid) {
    throw MatroidError(ErrorCode::kNotAFlat,
                       "extension onto " + flat.ToString() +
                           " violates " + report.first_violation->axiom);
  }
  return out;
}

Matroid Relax(const Matroid& m, ElementSet x) {
  CheckInside(m, x);
  const bool hyperplane = m.rank() > 0 && m.rank(x) == m.rank() - 1 && m.IsFlat(x);
  if (!hyperplane || !m.IsCircuit(x)) {
    throw MatroidError(ErrorCode::kNotACircuitHyperplane,
                       x.ToString() + " is not a circuit-hyperplane", {x});
  }
  std::vector<ElementSet> bases = Bases(m);
  bases.push_back(x);
  return FromBases(m.size(), bases);
}

}  // namespace spikelab
