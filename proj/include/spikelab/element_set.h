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

#ifndef SPIKELAB_ELEMENT_SET_H_
#define SPIKELAB_ELEMENT_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace spikelab {

// Hard capacity of every matroid in the library.
inline constexpr int kMaxElements = 16;

// A subset of {0, ..., kMaxElements-1} stored as a bitmask (bit i <=> i).
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(uint32_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= uint32_t{1} << e;
  }

  static constexpr ElementSet Full(int n) {
    return ElementSet((uint32_t{1} << n) - 1);
  }
  static constexpr ElementSet Single(int e) {
    return ElementSet(uint32_t{1} << e);
  }

  constexpr uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool IsSubsetOf(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Lowest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  // One past the largest element (0 for the empty set).
  constexpr int span() const { return 32 - std::countl_zero(bits_); }

  constexpr ElementSet With(int e) const {
    return ElementSet(bits_ | (uint32_t{1} << e));
  }
  constexpr ElementSet Without(int e) const {
    return ElementSet(bits_ & ~(uint32_t{1} << e));
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // "{0,3,5}"
  std::string ToString() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  uint32_t bits_ = 0;
};

// Iterates all subsets of `set` (including the empty set and `set`) in
// increasing numeric order.
template <typename F>
void ForEachSubset(ElementSet set, F&& f) {
  const uint32_t m = set.bits();
  uint32_t s = 0;
  while (true) {
    f(ElementSet(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace spikelab

#endif  // SPIKELAB_ELEMENT_SET_H_
