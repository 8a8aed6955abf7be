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

#ifndef SPIKELAB_VERIFY_H_
#define SPIKELAB_VERIFY_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spikelab/catalog.h"
#include "spikelab/matroid.h"
#include "spikelab/store.h"

namespace spikelab {

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
  // Replayable counterexamples: construction expressions plus context.
  std::vector<std::string> witnesses;
};

struct VerificationReport {
  std::string driver;
  std::vector<CheckItem> checks;
  std::vector<std::string> notes;  // informational, never affect the verdict
  double seconds = 0;

  bool passed() const;
  CheckItem& Add(std::string name, bool passed, std::string detail = {});
  void Merge(const VerificationReport& other);
  std::string ToText() const;
};

enum class Decider { kStructural, kExcluded };

// M is outside the class while every single-element deletion and
// contraction is inside.
VerificationReport VerifyExcludedMinor(const Matroid& m, const std::string& label,
                                       Decider decider = Decider::kStructural);

// The eleven listed excluded minors, their duals, and the twelve low-rank ones.
VerificationReport VerifyExcludedMinorCertificates();

// Single-element deletions and contractions of P8, plus self-duality. When
// `catalog` holds the 8-element level, also checks that P8 is the only
// member with that deletion/contraction profile.
VerificationReport VerifyP8(const std::vector<CatalogRecord>& catalog = {});

VerificationReport VerifyTheorem1(const std::vector<CatalogRecord>& catalog);
VerificationReport VerifyTheorem2(const std::vector<CatalogRecord>& catalog);
VerificationReport VerifyCorollaries(const std::vector<CatalogRecord>& catalog);
VerificationReport VerifyLemmas(const std::vector<CatalogRecord>& catalog,
                                uint64_t seed = 1, int random_specs = 100);
VerificationReport VerifyAlgebra(const std::vector<CatalogRecord>& catalog,
                                 uint64_t seed = 1, int random_specs = 100);

// A legal spike with rank in [min_rank, max_rank].
SpikeSpec RandomSpikeSpec(std::mt19937_64& rng, int min_rank, int max_rank,
                          int tip_class_size);

}  // namespace spikelab

#endif  // SPIKELAB_VERIFY_H_
