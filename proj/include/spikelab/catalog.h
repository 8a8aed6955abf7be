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

#ifndef SPIKELAB_CATALOG_H_
#define SPIKELAB_CATALOG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spikelab/matroid.h"

namespace spikelab {

// Element layout of Spike(): leg i is {2i, 2i+1} (x_i, y_i); the tip class
// occupies elements 2r .. 2r + tip_class_size - 1.
struct SpikeSpec {
  int rank = 3;
  int tip_class_size = 1;  // 0 builds a tipless spike
  // One entry per traversal: bit i clear picks x_i, set picks y_i.
  std::vector<uint32_t> traversals;

  bool tipped() const { return tip_class_size > 0; }
};

constexpr int SpikeX(int leg) { return 2 * leg; }
constexpr int SpikeY(int leg) { return 2 * leg + 1; }
constexpr int SpikeTip(const SpikeSpec& spec, int copy = 0) {
  return 2 * spec.rank + copy;
}
ElementSet SpikeLeg(int leg);
ElementSet TraversalSet(uint32_t choice, int rank);

Matroid Uniform(int r, int n);
// sizes[i] copies of element i of U_{r,n}; elements past sizes.size() keep
// one copy. {2,2}-U_{2,5} is MultiParallelUniform(2, 5, {2, 2}).
Matroid MultiParallelUniform(int r, int n, const std::vector<int>& sizes);
// 2U_{r,n}: every element doubled.
Matroid DoubledUniform(int r, int n);

Matroid Spike(const SpikeSpec& spec);

// Cycle matroid; vertices are 0..max label, loops allowed.
Matroid FromGraph(const std::vector<std::pair<int, int>>& edges);
// Column matroid over GF(p), p in {2, 3}; entries are reduced mod p.
Matroid FromMatrixGF(int p, const std::vector<std::vector<int>>& columns);

// Wheel graph with hub 0 and rim vertices 1..r: elements 0..r-1 are the
// spokes, element r + i is the rim edge {i+1, i+2 (mod r)}.
Matroid Wheel(int r);
ElementSet WheelRim(int r);
Matroid Whirl(int r);

// P7, P7minus (P7-), P7doubleminus (P7=), P8, O7, O7minus (O7-),
// AG23_del_e (AG23e), F7, F7dual, MW3, MW4, W3, W4.
Matroid Named(std::string_view name);
std::vector<std::string> NamedMatroidNames();

// True iff M\e ≅ P7* and M/e ≅ P7 for every element e.
bool PassesP8Characterization(const Matroid& m);

}  // namespace spikelab

#endif  // SPIKELAB_CATALOG_H_
