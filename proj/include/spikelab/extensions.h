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

#ifndef SPIKELAB_EXTENSIONS_H_
#define SPIKELAB_EXTENSIONS_H_

#include <vector>

#include "spikelab/matroid.h"

namespace spikelab {

inline constexpr int kExtensionLimit = 8;

// Flats of `m` forming one modular cut (possibly empty).
using ModularCut = std::vector<ElementSet>;

std::vector<ModularCut> ModularCuts(const Matroid& m);

// The extension of `m` by a new last element determined by `cut`.
Matroid ExtendByCut(const Matroid& m, const ModularCut& cut);

// Every single-element extension, one per modular cut. Throws kCapacityGuard
// when m has more than kExtensionLimit elements.
std::vector<Matroid> SingleElementExtensions(const Matroid& m);

}  // namespace spikelab

#endif  // SPIKELAB_EXTENSIONS_H_
