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

#ifndef SPIKELAB_MATROID_H_
#define SPIKELAB_MATROID_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spikelab/element_set.h"

namespace spikelab {

// A matroid on the ground set {0, ..., n-1}, n <= kMaxElements, stored as its
// full rank table: entry s is the rank of the subset with bitmask s. Values
// are immutable once constructed; every query is a table lookup.
class Matroid {
 public:
  // The empty matroid U_{0,0}.
  Matroid() : table_(1, 0) {}

  // Wraps a rank table without checking the matroid axioms; callers that
  // cannot vouch for the table should run ValidateAxioms on the result.
  static Matroid FromRankTable(int n, std::vector<uint8_t> table);

  int size() const { return n_; }
  int rank() const { return table_.back(); }
  int corank() const { return n_ - rank(); }
  ElementSet ground() const { return ElementSet::Full(n_); }

  // Throws kOutOfRangeElement if `set` is not inside the ground set.
  int rank(ElementSet set) const;
  // Unchecked lookup for hot loops.
  int RankOf(uint32_t mask) const { return table_[mask]; }

  bool IsIndependent(ElementSet set) const { return rank(set) == set.size(); }
  bool IsBasis(ElementSet set) const {
    return set.size() == rank() && rank(set) == rank();
  }
  bool IsCircuit(ElementSet set) const;
  bool IsFlat(ElementSet set) const;
  ElementSet Closure(ElementSet set) const;

  const std::vector<uint8_t>& rank_table() const { return table_; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  Matroid(int n, std::vector<uint8_t> table) : n_(n), table_(std::move(table)) {}

  int n_ = 0;
  std::vector<uint8_t> table_;
};

// --- Construction ---------------------------------------------------------

// Builds the matroid whose bases are exactly `bases`. Rejects families that
// are empty, of mixed cardinality, out of range, or that violate basis
// exchange (the error witness is a violating pair of bases).
Matroid FromBases(int n, const std::vector<ElementSet>& bases);

// Builds the matroid whose circuits are exactly `circuits`. When
// `rank_cap` is given the list is read as the non-spanning circuits of a
// matroid of that rank: every (rank_cap + 1)-set containing no listed
// circuit becomes a spanning circuit.
Matroid FromCircuits(int n, const std::vector<ElementSet>& circuits,
                     std::optional<int> rank_cap = std::nullopt);

// --- Axiom validation -----------------------------------------------------

struct AxiomViolation {
  std::string axiom;  // "normalization", "monotonicity", "unit-increase",
                      // "submodularity"
  std::vector<ElementSet> witness;
};

struct AxiomReport {
  bool valid = true;
  std::optional<AxiomViolation> first_violation;
};

// Exhaustive check of the rank axioms. Monotonicity, unit increase and
// submodularity are checked in their local single-element forms, which are
// equivalent to the global statements for integer set functions, so the
// scan is exhaustive at every supported size.
AxiomReport ValidateAxioms(const Matroid& m);
AxiomReport ValidateRankTable(int n, const std::vector<uint8_t>& table);

// --- Derived structure ------------------------------------------------------

std::vector<ElementSet> Bases(const Matroid& m);
std::vector<ElementSet> Circuits(const Matroid& m);
std::vector<ElementSet> Cocircuits(const Matroid& m);
// Flats of rank k.
std::vector<ElementSet> Flats(const Matroid& m, int k);
std::vector<ElementSet> AllFlats(const Matroid& m);
std::vector<ElementSet> Hyperplanes(const Matroid& m);
std::vector<ElementSet> CircuitHyperplanes(const Matroid& m);

ElementSet Loops(const Matroid& m);
ElementSet Coloops(const Matroid& m);
// Parallel classes of the non-loop elements, ordered by least element.
std::vector<ElementSet> ParallelClasses(const Matroid& m);
std::vector<ElementSet> SeriesClasses(const Matroid& m);
bool IsSimple(const Matroid& m);
bool IsCosimple(const Matroid& m);

// Result of si(M) or co(M). `retained[i]` is the source element kept as
// result element i; `image[e]` is the result element representing source
// element e, or -1 when e was a loop (coloop for cosimplification).
struct Reduction {
  Matroid matroid;
  std::vector<int> retained;
  std::vector<int> image;
};

Reduction Simplify(const Matroid& m);
Reduction Cosimplify(const Matroid& m);

// "n r m b1 ... bm" with lowercase-hex basis masks sorted ascending.
std::string ToLine(const Matroid& m);
Matroid FromLine(const std::string& line);

}  // namespace spikelab

#endif  // SPIKELAB_MATROID_H_
