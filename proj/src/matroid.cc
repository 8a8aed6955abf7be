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

#include "spikelab/matroid.h"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>

#include "spikelab/error.h"
#include "spikelab/transforms.h"

namespace spikelab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyBasisFamily: return "EmptyBasisFamily";
    case ErrorCode::kUnequalBasisSizes: return "UnequalBasisSizes";
    case ErrorCode::kExchangeAxiomViolation: return "ExchangeAxiomViolation";
    case ErrorCode::kCircuitContainment: return "CircuitContainment";
    case ErrorCode::kEliminationAxiomViolation: return "EliminationAxiomViolation";
    case ErrorCode::kOutOfRangeElement: return "OutOfRangeElement";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kLoopTarget: return "LoopTarget";
    case ErrorCode::kNotAFlat: return "NotAFlat";
    case ErrorCode::kNotACircuitHyperplane: return "NotACircuitHyperplane";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kBadField: return "BadField";
    case ErrorCode::kIllegalTraversalPair: return "IllegalTraversalPair";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kP8CertificationFailure: return "P8CertificationFailure";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kCapacityGuard: return "CapacityGuard";
    case ErrorCode::kStoreFailure: return "StoreFailure";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

namespace {

void CheckSize(int n) {
  if (n < 0 || n > kMaxElements) {
    throw MatroidError(ErrorCode::kCapacityExceeded,
                       "ground set size " + std::to_string(n) + " outside 0.." +
                           std::to_string(kMaxElements));
  }
}

void CheckInside(int n, ElementSet s) {
  if (!s.IsSubsetOf(ElementSet::Full(n))) {
    throw MatroidError(ErrorCode::kOutOfRangeElement,
                       s.ToString() + " not inside a ground set of size " +
                           std::to_string(n),
                       {s});
  }
}

// Rank table of the independence system given by `independent`, which must
// be closed under subsets.
std::vector<uint8_t> RankFromIndependence(int n,
                                          const std::vector<char>& independent) {
  const uint32_t total = uint32_t{1} << n;
  std::vector<uint8_t> table(total, 0);
  for (uint32_t s = 1; s < total; ++s) {
    if (independent[s]) {
      table[s] = static_cast<uint8_t>(std::popcount(s));
      continue;
    }
    uint8_t best = 0;
    for (uint32_t b = s; b != 0; b &= b - 1) {
      best = std::max(best, table[s & ~(b & -b)]);
    }
    table[s] = best;
  }
  return table;
}

std::optional<AxiomViolation> FirstViolation(int n,
                                             const std::vector<uint8_t>& t) {
  const uint32_t total = uint32_t{1} << n;
  if (t.size() != total) {
    return AxiomViolation{"table-size", {}};
  }
  if (t[0] != 0) return AxiomViolation{"normalization", {ElementSet()}};
  for (uint32_t s = 0; s < total; ++s) {
    for (int e = 0; e < n; ++e) {
      const uint32_t be = uint32_t{1} << e;
      if (s & be) continue;
      if (t[s | be] < t[s]) {
        return AxiomViolation{"monotonicity",
                              {ElementSet(s), ElementSet(s | be)}};
      }
      if (t[s | be] > t[s] + 1) {
        return AxiomViolation{"unit-increase",
                              {ElementSet(s), ElementSet(s | be)}};
      }
    }
  }
  for (uint32_t s = 0; s < total; ++s) {
    for (int e = 0; e < n; ++e) {
      const uint32_t be = uint32_t{1} << e;
      if (s & be) continue;
      for (int f = e + 1; f < n; ++f) {
        const uint32_t bf = uint32_t{1} << f;
        if (s & bf) continue;
        if (t[s | be] + t[s | bf] < t[s | be | bf] + t[s]) {
          return AxiomViolation{"submodularity",
                                {ElementSet(s | be), ElementSet(s | bf)}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Matroid Matroid::FromRankTable(int n, std::vector<uint8_t> table) {
  CheckSize(n);
  if (table.size() != (size_t{1} << n)) {
    throw MatroidError(ErrorCode::kBadParameters,
                       "rank table has " + std::to_string(table.size()) +
                           " entries for ground set size " + std::to_string(n));
  }
  return Matroid(n, std::move(table));
}

int Matroid::rank(ElementSet set) const {
  CheckInside(n_, set);
  return table_[set.bits()];
}

bool Matroid::IsCircuit(ElementSet set) const {
  const int k = set.size();
  if (k == 0 || rank(set) != k - 1) return false;
  for (int e : set.elements()) {
    if (table_[set.Without(e).bits()] != k - 1) return false;
  }
  return true;
}

bool Matroid::IsFlat(ElementSet set) const {
  const int r = rank(set);
  for (int e = 0; e < n_; ++e) {
    if (!set.contains(e) && table_[set.With(e).bits()] == r) return false;
  }
  return true;
}

ElementSet Matroid::Closure(ElementSet set) const {
  const int r = rank(set);
  ElementSet out = set;
  for (int e = 0; e < n_; ++e) {
    if (table_[set.With(e).bits()] == r) out = out.With(e);
  }
  return out;
}

Matroid FromBases(int n, const std::vector<ElementSet>& bases) {
  CheckSize(n);
  if (bases.empty()) {
    throw MatroidError(ErrorCode::kEmptyBasisFamily, "no bases given");
  }
  const int r = bases.front().size();
  for (const ElementSet& b : bases) {
    CheckInside(n, b);
    if (b.size() != r) {
      throw MatroidError(ErrorCode::kUnequalBasisSizes,
                         bases.front().ToString() + " vs " + b.ToString(),
                         {bases.front(), b});
    }
  }
  const uint32_t total = uint32_t{1} << n;
  std::vector<char> is_basis(total, 0);
  for (const ElementSet& b : bases) is_basis[b.bits()] = 1;

  // Independent sets are the subsets of bases.
  std::vector<char> independent = is_basis;
  for (uint32_t s = total; s-- > 0;) {
    if (!independent[s]) continue;
    for (uint32_t b = s; b != 0; b &= b - 1) independent[s & ~(b & -b)] = 1;
  }
  std::vector<uint8_t> table = RankFromIndependence(n, independent);

  // max |A ∩ B| is a matroid rank function exactly when the family obeys
  // basis exchange, so a failed axiom check is located by a direct scan.
  if (FirstViolation(n, table)) {
    for (const ElementSet& b1 : bases) {
      for (const ElementSet& b2 : bases) {
        for (int x : (b1 - b2).elements()) {
          bool exchanged = false;
          for (int y : (b2 - b1).elements()) {
            if (is_basis[b1.Without(x).With(y).bits()]) {
              exchanged = true;
              break;
            }
          }
          if (!exchanged) {
            throw MatroidError(ErrorCode::kExchangeAxiomViolation,
                               "no exchange for " + std::to_string(x) +
                                   " between " + b1.ToString() + " and " +
                                   b2.ToString(),
                               {b1, b2});
          }
        }
      }
    }
    throw MatroidError(ErrorCode::kExchangeAxiomViolation,
                       "basis family is not a matroid");
  }
  return Matroid::FromRankTable(n, std::move(table));
}

Matroid FromCircuits(int n, const std::vector<ElementSet>& circuits,
                     std::optional<int> rank_cap) {
  CheckSize(n);
  for (size_t i = 0; i < circuits.size(); ++i) {
    CheckInside(n, circuits[i]);
    if (circuits[i].empty()) {
      throw MatroidError(ErrorCode::kBadParameters, "empty circuit");
    }
    if (rank_cap && circuits[i].size() > *rank_cap + 1) {
      throw MatroidError(ErrorCode::kBadParameters,
                         circuits[i].ToString() + " is too large for rank " +
                             std::to_string(*rank_cap),
                         {circuits[i]});
    }
    for (size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && circuits[i].IsSubsetOf(circuits[j])) {
        throw MatroidError(ErrorCode::kCircuitContainment,
                           circuits[i].ToString() + " inside " +
                               circuits[j].ToString(),
                           {circuits[i], circuits[j]});
      }
    }
  }
  const uint32_t total = uint32_t{1} << n;
  std::vector<char> dependent(total, 0);
  for (const ElementSet& c : circuits) dependent[c.bits()] = 1;
  for (uint32_t s = 1; s < total; ++s) {
    if (dependent[s]) continue;
    if (rank_cap && std::popcount(s) > *rank_cap) {
      dependent[s] = 1;
      continue;
    }
    for (uint32_t b = s; b != 0; b &= b - 1) {
      if (dependent[s & ~(b & -b)]) {
        dependent[s] = 1;
        break;
      }
    }
  }
  std::vector<char> independent(total);
  for (uint32_t s = 0; s < total; ++s) independent[s] = !dependent[s];
  std::vector<uint8_t> table = RankFromIndependence(n, independent);

  if (auto violation = FirstViolation(n, table)) {
    auto free_of_circuits = [&](uint32_t s) { return !dependent[s]; };
    for (const ElementSet& c1 : circuits) {
      for (const ElementSet& c2 : circuits) {
        if (c1 == c2) continue;
        for (int e : (c1 & c2).elements()) {
          if (free_of_circuits((c1 | c2).Without(e).bits())) {
            throw MatroidError(ErrorCode::kEliminationAxiomViolation,
                               "eliminating " + std::to_string(e) + " from " +
                                   c1.ToString() + " and " + c2.ToString(),
                               {c1, c2});
          }
        }
      }
    }
    throw MatroidError(ErrorCode::kEliminationAxiomViolation,
                       "circuit family is not a matroid (" +
                           violation->axiom + ")",
                       violation->witness);
  }
  return Matroid::FromRankTable(n, std::move(table));
}

AxiomReport ValidateRankTable(int n, const std::vector<uint8_t>& table) {
  AxiomReport report;
  report.first_violation = FirstViolation(n, table);
  report.valid = !report.first_violation.has_value();
  return report;
}

AxiomReport ValidateAxioms(const Matroid& m) {
  return ValidateRankTable(m.size(), m.rank_table());
}

std::vector<ElementSet> Bases(const Matroid& m) {
  std::vector<ElementSet> out;
  const int r = m.rank();
  const uint32_t total = uint32_t{1} << m.size();
  for (uint32_t s = 0; s < total; ++s) {
    if (std::popcount(s) == r && m.RankOf(s) == r) out.emplace_back(s);
  }
  return out;
}

std::vector<ElementSet> Circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  const uint32_t total = uint32_t{1} << m.size();
  for (uint32_t s = 1; s < total; ++s) {
    if (m.RankOf(s) + 1 == std::popcount(s) && m.IsCircuit(ElementSet(s))) {
      out.emplace_back(s);
    }
  }
  return out;
}

std::vector<ElementSet> Cocircuits(const Matroid& m) {
  return Circuits(Dual(m));
}

std::vector<ElementSet> Flats(const Matroid& m, int k) {
  std::vector<ElementSet> out;
  const uint32_t total = uint32_t{1} << m.size();
  for (uint32_t s = 0; s < total; ++s) {
    if (m.RankOf(s) == k && m.IsFlat(ElementSet(s))) out.emplace_back(s);
  }
  return out;
}

std::vector<ElementSet> AllFlats(const Matroid& m) {
  std::vector<ElementSet> out;
  const uint32_t total = uint32_t{1} << m.size();
  for (uint32_t s = 0; s < total; ++s) {
    if (m.IsFlat(ElementSet(s))) out.emplace_back(s);
  }
  return out;
}

std::vector<ElementSet> Hyperplanes(const Matroid& m) {
  if (m.rank() == 0) return {};
  return Flats(m, m.rank() - 1);
}

std::vector<ElementSet> CircuitHyperplanes(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet h : Hyperplanes(m)) {
    if (m.IsCircuit(h)) out.push_back(h);
  }
  return out;
}

ElementSet Loops(const Matroid& m) {
  ElementSet out;
  for (int e = 0; e < m.size(); ++e) {
    if (m.RankOf(uint32_t{1} << e) == 0) out = out.With(e);
  }
  return out;
}

ElementSet Coloops(const Matroid& m) {
  ElementSet out;
  const uint32_t full = m.ground().bits();
  for (int e = 0; e < m.size(); ++e) {
    if (m.RankOf(full & ~(uint32_t{1} << e)) < m.rank()) out = out.With(e);
  }
  return out;
}

std::vector<ElementSet> ParallelClasses(const Matroid& m) {
  std::vector<ElementSet> out;
  ElementSet seen = Loops(m);
  for (int e = 0; e < m.size(); ++e) {
    if (seen.contains(e)) continue;
    ElementSet cls = ElementSet::Single(e);
    for (int f = e + 1; f < m.size(); ++f) {
      if (!seen.contains(f) && m.RankOf((1u << e) | (1u << f)) == 1) {
        cls = cls.With(f);
      }
    }
    seen |= cls;
    out.push_back(cls);
  }
  return out;
}

std::vector<ElementSet> SeriesClasses(const Matroid& m) {
  return ParallelClasses(Dual(m));
}

bool IsSimple(const Matroid& m) {
  return Loops(m).empty() &&
         static_cast<int>(ParallelClasses(m).size()) == m.size();
}

bool IsCosimple(const Matroid& m) { return IsSimple(Dual(m)); }

Reduction Simplify(const Matroid& m) {
  Reduction out;
  out.image.assign(m.size(), -1);
  ElementSet keep;
  for (ElementSet cls : ParallelClasses(m)) {
    for (int e : cls.elements()) {
      out.image[e] = static_cast<int>(out.retained.size());
    }
    keep = keep.With(cls.front());
    out.retained.push_back(cls.front());
  }
  out.matroid = Restrict(m, keep);
  return out;
}

Reduction Cosimplify(const Matroid& m) {
  Reduction dual = Simplify(Dual(m));
  dual.matroid = Dual(dual.matroid);
  return dual;
}

std::string ToLine(const Matroid& m) {
  std::vector<ElementSet> bases = Bases(m);
  std::ostringstream out;
  out << m.size() << ' ' << m.rank() << ' ' << bases.size();
  char buf[16];
  for (ElementSet b : bases) {
    std::snprintf(buf, sizeof(buf), " %x", b.bits());
    out << buf;
  }
  return out.str();
}

Matroid FromLine(const std::string& line) {
  std::istringstream in(line);
  int n = -1, r = -1;
  long m = -1;
  if (!(in >> n >> r >> m) || n < 0 || r < 0 || m < 1) {
    throw MatroidError(ErrorCode::kParseError, "bad matroid header: " + line);
  }
  CheckSize(n);
  std::vector<ElementSet> bases;
  uint32_t previous = 0;
  for (long i = 0; i < m; ++i) {
    std::string token;
    if (!(in >> token)) {
      throw MatroidError(ErrorCode::kParseError, "missing basis in: " + line);
    }
    size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used, 16);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.empty()) {
      throw MatroidError(ErrorCode::kParseError, "bad basis token '" + token + "'");
    }
    const uint32_t bits = static_cast<uint32_t>(value);
    if (i > 0 && bits <= previous) {
      throw MatroidError(ErrorCode::kParseError,
                         "bases not strictly ascending in: " + line);
    }
    previous = bits;
    bases.emplace_back(bits);
  }
  Matroid out = FromBases(n, bases);
  if (out.rank() != r) {
    throw MatroidError(ErrorCode::kParseError, "declared rank disagrees: " + line);
  }
  return out;
}

}  // namespace spikelab
