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

#ifndef SPIKELAB_ANALYSIS_H_
#define SPIKELAB_ANALYSIS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spikelab/element_set.h"
#include "spikelab/matroid.h"

namespace spikelab {

// --- Tutte connectivity -----------------------------------------------------

// lambda(X) = r(X) + r(E - X) - r(M).
int Connectivity(const Matroid& m, ElementSet x);

// A j-separation (X, E - X): both sides have at least j elements and
// lambda(X) <= j - 1. Returns the side X not containing the last element.
std::optional<ElementSet> FindSeparation(const Matroid& m, int j);

// k-connected means no j-separation for any j < k. Supported k: 1, 2, 3.
bool IsKConnected(const Matroid& m, int k);
inline bool IsConnected(const Matroid& m) { return IsKConnected(m, 2); }
inline bool IsThreeConnected(const Matroid& m) { return IsKConnected(m, 3); }

// --- Isomorphism ------------------------------------------------------------

// The matroid relabeled so that its sorted basis-mask sequence is
// lexicographically least over all relabelings of the ground set.
struct CanonicalForm {
  int ground_size = 0;
  int rank = 0;
  std::vector<uint32_t> bases;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  size_t operator()(const CanonicalForm& f) const;
};

// labeling[i] is the element of `m` that receives canonical label i.
std::vector<int> CanonicalLabeling(const Matroid& m);
CanonicalForm ComputeCanonicalForm(const Matroid& m);
Matroid FromCanonicalForm(const CanonicalForm& form);

// Cheap isomorphism invariant used to reject most non-isomorphic pairs
// before any labeling search.
struct IsoSignature {
  int n = 0;
  int rank = 0;
  int basis_count = 0;
  std::vector<int> element_degrees;  // sorted basis counts per element

  friend bool operator==(const IsoSignature&, const IsoSignature&) = default;
};
IsoSignature ComputeSignature(const Matroid& m);

bool AreIsomorphic(const Matroid& a, const Matroid& b);
// iso[e] is the element of `b` matched to element e of `a`.
std::optional<std::vector<int>> FindIsomorphism(const Matroid& a,
                                                const Matroid& b);

// --- Small circuits and removability ----------------------------------------

std::vector<ElementSet> Triangles(const Matroid& m);
std::vector<ElementSet> Triads(const Matroid& m);

struct RemovableSets {
  ElementSet deletable;     // e with M\e 3-connected
  ElementSet contractible;  // e with M/e 3-connected
};
RemovableSets Removable(const Matroid& m);

}  // namespace spikelab

#endif  // SPIKELAB_ANALYSIS_H_
