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

#ifndef SPIKELAB_SPIKE_H_
#define SPIKELAB_SPIKE_H_

#include <optional>
#include <string>
#include <vector>

#include "spikelab/matroid.h"
#include "spikelab/transforms.h"

namespace spikelab {

// Pairing whose pair unions are all 4-circuits and 4-cocircuits.
std::optional<std::vector<ElementSet>> RecognizeTiplessSpike(const Matroid& m);

struct TippedSpikeShape {
  int tip = -1;
  std::vector<ElementSet> legs;
};
std::optional<TippedSpikeShape> RecognizeTippedSpike(const Matroid& m);

struct TipCotipShape {
  int tip = -1;
  int cotip = -1;
  std::vector<ElementSet> legs;
};
std::optional<TipCotipShape> RecognizeTipCotip(const Matroid& m);

struct SpikeEmbedding {
  ElementSet tip_class;               // empty or a parallel class
  std::vector<ElementSet> legs;       // blocks of size 1 (half) or 2 (full)
  int ambient_rank = 0;
  std::vector<ElementSet> visible_traversals;
};

// Restriction of an overloaded rank-r tipped spike, r = r(m).
// Throws kRankTooSmall when r(m) < 3.
std::optional<SpikeEmbedding> EmbedAsSpikeRestriction(const Matroid& m);

enum class StructuralCase {
  kNone,
  kRankZero,
  kRankOne,
  kRankTwo,
  kDoubledUniform,  // restriction of 2U_{r,r+1} plus loops
  kSpikeRestriction,
};
std::string_view StructuralCaseName(StructuralCase c);

struct ExcludedMinorHit {
  std::string pattern;
  bool in_dual = false;  // found in the dual of the tested matroid
  MinorWitness witness;
};

struct MembershipVerdict {
  bool in_class = false;
  StructuralCase structural_case = StructuralCase::kNone;
  std::optional<SpikeEmbedding> embedding;
  std::optional<ExcludedMinorHit> excluded;
};

MembershipVerdict IsSpikeMinorStructural(const Matroid& m);
MembershipVerdict IsSpikeMinorExcluded(const Matroid& m);

struct ListedMatroid {
  std::string name;
  std::string expression;  // accepted by ParseExpression
  Matroid matroid;
};
// The eleven excluded minors for the class of spike minors.
const std::vector<ListedMatroid>& SpikeExcludedMinors();
// The nine 3-connected excluded minors.
const std::vector<ListedMatroid>& ThreeConnectedExcludedMinors();
// The twelve excluded minors of rank at most three.
const std::vector<ListedMatroid>& LowRankExcludedMinors();

bool IsInS3(const Matroid& m);
bool IsMinimallyNotInS3(const Matroid& m);

}  // namespace spikelab

#endif  // SPIKELAB_SPIKE_H_
