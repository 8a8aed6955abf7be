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

#ifndef SPIKELAB_ERROR_H_
#define SPIKELAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spikelab/element_set.h"

namespace spikelab {

enum class ErrorCode {
  kEmptyBasisFamily,
  kUnequalBasisSizes,
  kExchangeAxiomViolation,
  kCircuitContainment,
  kEliminationAxiomViolation,
  kOutOfRangeElement,
  kOverlappingSets,
  kCapacityExceeded,
  kLoopTarget,
  kNotAFlat,
  kNotACircuitHyperplane,
  kBadParameters,
  kBadField,
  kIllegalTraversalPair,
  kUnknownName,
  kP8CertificationFailure,
  kRankTooSmall,
  kCapacityGuard,
  kStoreFailure,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. `witness()`
// carries the offending sets when the failure has a concrete certificate
// (a pair of bases violating exchange, two nested circuits, ...).
class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorCode code, const std::string& message,
               std::vector<ElementSet> witness = {})
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::vector<ElementSet>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<ElementSet> witness_;
};

}  // namespace spikelab

#endif  // SPIKELAB_ERROR_H_
