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

#include <algorithm>
#include <bit>

#include "spikelab/analysis.h"
#include "spikelab/error.h"

namespace spikelab {
namespace {

// Branch-and-bound over labelings. Labels are handed out 0, 1, 2, ...; once
// labels 0..j are fixed, the basis indicator of every r-subset of labels
// whose largest label is j is known. Ordering r-subsets by mask value, the
// lexicographically least sorted basis sequence is the lexicographically
// greatest indicator string, so each level contributes one comparable
// segment and any branch whose segment loses to the incumbent is cut.
//
// Elements that are clones (the transposition swapping them is an
// automorphism) are interchangeable at every level, so only the least
// unlabeled member of each clone class is branched on.
class Labeler {
 public:
  explicit Labeler(const Matroid& m) : m_(m), n_(m.size()), r_(m.rank()) {
    bases_ = Bases(m);
    ComputeClones();
    // subsets_[j]: (r-1)-subsets of labels {0..j-1}, ascending.
    subsets_.resize(n_);
    if (r_ >= 1) {
      for (int j = 0; j < n_; ++j) {
        const uint32_t limit = uint32_t{1} << j;
        for (uint32_t s = 0; s < limit; ++s) {
          if (std::popcount(s) == r_ - 1) subsets_[j].push_back(s);
        }
      }
    }
    best_.resize(n_);
    label_.assign(n_, -1);
  }

  std::vector<int> Run() {
    if (r_ == 0 || r_ == n_) {
      std::vector<int> identity(n_);
      for (int i = 0; i < n_; ++i) identity[i] = i;
      return identity;
    }
    Search(0, 0);
    return result_;
  }

 private:
  void ComputeClones() {
    clone_rep_.resize(n_);
    for (int e = 0; e < n_; ++e) {
      clone_rep_[e] = e;
      for (int f = 0; f < e; ++f) {
        if (clone_rep_[f] == f && AreClones(f, e)) {
          clone_rep_[e] = f;
          break;
        }
      }
    }
  }

  bool AreClones(int e, int f) const {
    const uint32_t be = uint32_t{1} << e;
    const uint32_t bf = uint32_t{1} << f;
    for (ElementSet b : bases_) {
      const uint32_t s = b.bits();
      const bool has_e = s & be;
      const bool has_f = s & bf;
      if (has_e == has_f) continue;
      const uint32_t swapped = s ^ be ^ bf;
      if (m_.RankOf(swapped) != r_) return false;
    }
    return true;
  }

  void Search(int j, uint32_t used) {
    if (j == n_) {
      result_ = label_;
      return;
    }
    std::vector<char> segment(subsets_[j].size());
    uint32_t tried_reps = 0;
    for (int c = 0; c < n_; ++c) {
      if (used & (uint32_t{1} << c)) continue;
      const uint32_t rep_bit = uint32_t{1} << clone_rep_[c];
      if (tried_reps & rep_bit) continue;
      tried_reps |= rep_bit;

      label_[j] = c;
      const uint32_t cbit = uint32_t{1} << c;
      for (size_t i = 0; i < subsets_[j].size(); ++i) {
        uint32_t orig = cbit;
        for (uint32_t s = subsets_[j][i]; s != 0; s &= s - 1) {
          orig |= uint32_t{1} << label_[std::countr_zero(s)];
        }
        segment[i] = m_.RankOf(orig) == r_;
      }
      if (j < best_depth_) {
        const int cmp = Compare(segment, best_[j]);
        if (cmp < 0) continue;
        if (cmp > 0) {
          best_[j] = segment;
          best_depth_ = j + 1;
        }
      } else {
        best_[j] = segment;
        best_depth_ = j + 1;
      }
      Search(j + 1, used | cbit);
    }
    label_[j] = -1;
  }

  // Greater indicator string wins.
  static int Compare(const std::vector<char>& a, const std::vector<char>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  const Matroid& m_;
  const int n_;
  const int r_;
  std::vector<ElementSet> bases_;
  std::vector<int> clone_rep_;
  std::vector<std::vector<uint32_t>> subsets_;
  std::vector<std::vector<char>> best_;
  int best_depth_ = 0;
  std::vector<int> label_;
  std::vector<int> result_;
};

}  // namespace

size_t CanonicalFormHash::operator()(const CanonicalForm& f) const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<uint64_t>(f.ground_size));
  mix(static_cast<uint64_t>(f.rank));
  for (uint32_t b : f.bases) mix(b);
  return static_cast<size_t>(h);
}

std::vector<int> CanonicalLabeling(const Matroid& m) {
  return Labeler(m).Run();
}

CanonicalForm ComputeCanonicalForm(const Matroid& m) {
  const std::vector<int> labeling = CanonicalLabeling(m);
  std::vector<int> label_of(m.size());
  for (int i = 0; i < m.size(); ++i) label_of[labeling[i]] = i;
  CanonicalForm form;
  form.ground_size = m.size();
  form.rank = m.rank();
  for (ElementSet b : Bases(m)) {
    uint32_t relabeled = 0;
    for (int e : b.elements()) relabeled |= uint32_t{1} << label_of[e];
    form.bases.push_back(relabeled);
  }
  std::sort(form.bases.begin(), form.bases.end());
  return form;
}

Matroid FromCanonicalForm(const CanonicalForm& form) {
  std::vector<ElementSet> bases;
  bases.reserve(form.bases.size());
  for (uint32_t b : form.bases) bases.emplace_back(b);
  return FromBases(form.ground_size, bases);
}

IsoSignature ComputeSignature(const Matroid& m) {
  IsoSignature sig;
  sig.n = m.size();
  sig.rank = m.rank();
  sig.element_degrees.assign(m.size(), 0);
  for (ElementSet b : Bases(m)) {
    ++sig.basis_count;
    for (int e : b.elements()) ++sig.element_degrees[e];
  }
  std::sort(sig.element_degrees.begin(), sig.element_degrees.end());
  return sig;
}

bool AreIsomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  if (!(ComputeSignature(a) == ComputeSignature(b))) return false;
  return ComputeCanonicalForm(a) == ComputeCanonicalForm(b);
}

std::optional<std::vector<int>> FindIsomorphism(const Matroid& a,
                                                const Matroid& b) {
  if (!AreIsomorphic(a, b)) return std::nullopt;
  const std::vector<int> la = CanonicalLabeling(a);
  const std::vector<int> lb = CanonicalLabeling(b);
  std::vector<int> iso(a.size());
  for (int i = 0; i < a.size(); ++i) iso[la[i]] = lb[i];
  return iso;
}

}  // namespace spikelab
