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

#ifndef SPIKELAB_TRANSFORMS_H_
#define SPIKELAB_TRANSFORMS_H_

#include <map>
#include <utility>
#include <vector>

#include "spikelab/element_set.h"
#include "spikelab/matroid.h"

namespace spikelab {

// Records how a minor sits inside its source: result element i is source
// element element_map[i], and the map is increasing.
struct MinorWitness {
  ElementSet contracted;
  ElementSet deleted;
  std::vector<int> element_map;
};

// Every minor renumbers the surviving elements densely in source order.
Matroid Delete(const Matroid& m, ElementSet d);
Matroid Contract(const Matroid& m, ElementSet c);
Matroid Restrict(const Matroid& m, ElementSet keep);
std::pair<Matroid, MinorWitness> Minor(const Matroid& m, ElementSet c,
                                       ElementSet d);

Matroid Dual(const Matroid& m);

// Elements of `b` are numbered after those of `a`.
Matroid DirectSum(const Matroid& a, const Matroid& b);

// Replaces element e by sizes[e] pairwise-parallel copies (elements missing
// from the map keep a single copy). Copies are consecutive and follow
// source order.
Matroid ParallelReplace(const Matroid& m, const std::map<int, int>& sizes);

// Adds a new last element freely on the flat `flat`.
Matroid PrincipalExtension(const Matroid& m, ElementSet flat);

// Declares the circuit-hyperplane `x` a basis.
Matroid Relax(const Matroid& m, ElementSet x);

}  // namespace spikelab

#endif  // SPIKELAB_TRANSFORMS_H_
