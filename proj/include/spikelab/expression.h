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

#ifndef SPIKELAB_EXPRESSION_H_
#define SPIKELAB_EXPRESSION_H_

#include <string>
#include <string_view>

#include "spikelab/matroid.h"

namespace spikelab {

// Builds a matroid from a construction expression such as
//   dsum(U(1,3),PU(2,3;2))   relax(P7,{0,1,6})   spike(4;tip=1;trav=[xxyy])
// Throws kParseError on malformed input; construction errors propagate.
Matroid ParseExpression(std::string_view text);

// "bases(n;b1,b2,...)" with hex masks; parses back to the same matroid.
std::string BasesExpression(const Matroid& m);

}  // namespace spikelab

#endif  // SPIKELAB_EXPRESSION_H_
