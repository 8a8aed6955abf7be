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

#include "spikelab/representability.h"

#include <vector>

#include "spikelab/catalog.h"
#include "spikelab/minors.h"
#include "spikelab/transforms.h"

namespace spikelab {
namespace {

const std::vector<MinorPattern>& TernaryObstructions() {
  static const std::vector<MinorPattern> patterns = [] {
    std::vector<MinorPattern> out;
    out.emplace_back(Uniform(2, 5));
    out.emplace_back(Uniform(3, 5));
    out.emplace_back(Named("F7"));
    out.emplace_back(Dual(Named("F7")));
    return out;
  }();
  return patterns;
}

}  // namespace

bool IsBinary(const Matroid& m) {
  static const MinorPattern u24(Uniform(2, 4));
  return !FindMinor(m, u24).has_value();
}

bool IsTernary(const Matroid& m) {
  for (const MinorPattern& p : TernaryObstructions()) {
    if (FindMinor(m, p)) return false;
  }
  return true;
}

}  // namespace spikelab
