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

#ifndef MIXMAT_ELEMENT_SET_H_
#define MIXMAT_ELEMENT_SET_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace mixmat {

// Largest ground set any operation accepts. Everything in this library is
// exponential in the ground set size.
inline constexpr int kMaxElements = 24;

// Largest number of circuit representatives (one per +/- pair) accepted.
inline constexpr std::size_t kMaxCircuits = 100000;

// A subset of ground indices stored as a fixed-width bit mask. Iteration
// yields indices in increasing order.
class ElementSet {
 public:
  using Bits = std::uint32_t;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Bits bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  static constexpr ElementSet single(int i) { return ElementSet(Bits{1} << i); }
  // {0, ..., n-1}
  static constexpr ElementSet range(int n) {
    return n >= 32 ? ElementSet(~Bits{0}) : ElementSet((Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  // Smallest index; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr void insert(int i) { bits_ |= Bits{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(Bits{1} << i); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    Bits rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  Bits bits_ = 0;
};

// Drops the positions in `removed` and shifts the surviving indices down so
// that they stay contiguous. Used to re-index after deletion/contraction.
constexpr ElementSet compress(ElementSet s, ElementSet removed) {
  ElementSet out;
  int next = 0;
  for (int i = 0; i < 32; ++i) {
    if (removed.contains(i)) continue;
    if (s.contains(i)) out.insert(next);
    ++next;
  }
  return out;
}

// Inverse of compress: spreads `s` over the positions not in `removed`.
constexpr ElementSet expand(ElementSet s, ElementSet removed) {
  ElementSet out;
  int next = 0;
  for (int i = 0; i < 32; ++i) {
    if (removed.contains(i)) continue;
    if (s.contains(next)) out.insert(i);
    ++next;
  }
  return out;
}

}  // namespace mixmat

#endif  // MIXMAT_ELEMENT_SET_H_
