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

#ifndef SPIKELAB_MINORS_H_
#define SPIKELAB_MINORS_H_

#include <optional>
#include <vector>

#include "spikelab/analysis.h"
#include "spikelab/matroid.h"
#include "spikelab/transforms.h"

namespace spikelab {

// Pattern data reused across many containment queries.
class MinorPattern {
 public:
  explicit MinorPattern(Matroid pattern);

  const Matroid& matroid() const { return matroid_; }
  const CanonicalForm& form() const { return form_; }
  const IsoSignature& signature() const { return signature_; }
  int loops() const { return loops_; }

 private:
  Matroid matroid_;
  CanonicalForm form_;
  IsoSignature signature_;
  int loops_ = 0;
};

// Searches for host/C\D isomorphic to the pattern with C independent and
// |C| = r(host) - r(pattern). On success element_map[i] is the host element
// playing pattern element i.
std::optional<MinorWitness> FindMinor(const Matroid& host,
                                      const MinorPattern& pattern);
std::optional<MinorWitness> HasMinor(const Matroid& host, const Matroid& pattern);

inline constexpr int kAllMinorsLimit = 10;

// Canonical forms of minors M/C\D. With up_to_iso the result is the sorted
// set of distinct forms; otherwise one entry per pair (C independent,
// D coindependent), in pair order. Throws kCapacityGuard above the limit.
std::vector<CanonicalForm> AllMinors(const Matroid& host, bool up_to_iso = true);

}  // namespace spikelab

#endif  // SPIKELAB_MINORS_H_
