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

#ifndef SPIKELAB_REPRESENTABILITY_H_
#define SPIKELAB_REPRESENTABILITY_H_

#include "spikelab/matroid.h"

namespace spikelab {

// No U_{2,4}-minor.
bool IsBinary(const Matroid& m);
// None of U_{2,5}, U_{3,5}, F7, F7* as a minor.
bool IsTernary(const Matroid& m);

}  // namespace spikelab

#endif  // SPIKELAB_REPRESENTABILITY_H_
