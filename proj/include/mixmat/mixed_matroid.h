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

#ifndef MIXMAT_MIXED_MATROID_H_
#define MIXMAT_MIXED_MATROID_H_

#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

#include "mixmat/element_set.h"
#include "mixmat/oriented_matroid.h"
#include "mixmat/signed_set.h"

namespace mixmat {

// An oriented matroid whose signs on the `unsigned_elements` set have been
// forgotten. The oriented matroid is the fixed reference orientation; every
// Signature is read relative to it.
class MixedMatroid {
 public:
  MixedMatroid() = default;
  // Throws InputError unless unsigned_elements is a subset of the ground set.
  MixedMatroid(OrientedMatroid om, ElementSet unsigned_elements);

  const OrientedMatroid& oriented() const { return om_; }
  const GroundSet& ground() const { return om_.ground(); }
  ElementSet unsigned_elements() const { return unsigned_; }
  ElementSet signed_elements() const { return ground().all() - unsigned_; }

  friend bool operator==(const MixedMatroid&, const MixedMatroid&) = default;

 private:
  OrientedMatroid om_;
  ElementSet unsigned_;
};

MixedMatroid make_mixed(OrientedMatroid om, ElementSet unsigned_elements);

// A circuit with its signs forgotten on the unsigned elements. `unsigned_part`
// keeps which unsigned elements the circuit used.
struct MixedCircuit {
  SignedSet signed_part;
  ElementSet unsigned_part;

  ElementSet support() const { return signed_part.support() | unsigned_part; }

  friend bool operator==(const MixedCircuit&, const MixedCircuit&) = default;
  friend auto operator<=>(const MixedCircuit&, const MixedCircuit&) = default;
};

// One representative per +/- pair, with the signed part canonical. Circuits
// that coincide after forgetting collapse into one.
std::vector<MixedCircuit> mixed_circuits(const MixedMatroid& mm);

// True when no element outside the unsigned part carries -1. A circuit made
// only of unsigned elements is positive.
bool is_positive(const MixedCircuit& mc);

// Signs for some of the unsigned elements, relative to the reference
// orientation: elements of `flipped` are reversed, the rest of `domain` keep
// the reference sign. flipped is a subset of domain.
struct Signature {
  ElementSet domain;
  ElementSet flipped;

  int sign(int i) const { return flipped.contains(i) ? -1 : 1; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Fixes the elements of domain(s): reorients the reference on the flipped
// ones and removes domain(s) from the unsigned set. Throws InputError if
// domain(s) is not within the unsigned elements.
MixedMatroid apply_signature(const MixedMatroid& mm, const Signature& s);

// All 2^|A| full signatures of the unsigned set A, in lexicographic order by
// element index with +1 before -1 (the smallest element varies slowest).
class CoherentOrientations {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Signature;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Signature;

    iterator() = default;
    iterator(const CoherentOrientations* owner, std::uint64_t counter)
        : owner_(owner), counter_(counter) {}
    Signature operator*() const { return owner_->at(counter_); }
    iterator& operator++() {
      ++counter_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++counter_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.counter_ == b.counter_;
    }

   private:
    const CoherentOrientations* owner_ = nullptr;
    std::uint64_t counter_ = 0;
  };

  explicit CoherentOrientations(ElementSet unsigned_elements);

  std::uint64_t size() const { return std::uint64_t{1} << elements_.size(); }
  Signature at(std::uint64_t k) const;
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  ElementSet domain_;
  std::vector<int> elements_;
};

// Throws CapacityError when |A| > kMaxElements.
CoherentOrientations coherent_orientations(const MixedMatroid& mm);

// Minors and duality carry the unsigned set along: A \ X for minors, A for
// the dual. Indices are re-indexed with compress().
MixedMatroid deletion(const MixedMatroid& mm, ElementSet removed);
MixedMatroid contraction(const MixedMatroid& mm, ElementSet removed);
MixedMatroid dual(const MixedMatroid& mm);

enum class DecisionMethod { kShortcut, kBruteForce };

struct CyclicityReport {
  bool value = false;
  // kBruteForce when the shortcut's hypothesis (coloop-free, resp. loop-free)
  // did not hold.
  DecisionMethod method = DecisionMethod::kShortcut;
};

// Whether some coherent reorientation is totally cyclic. Decided on the
// contraction of A when the matroid has no coloops, by enumeration otherwise.
CyclicityReport totally_cyclic_report(const MixedMatroid& mm);
bool is_totally_cyclic(const MixedMatroid& mm);

// Whether some coherent reorientation is acyclic. Decided on the deletion of
// A when the matroid has no loops, by enumeration otherwise.
CyclicityReport acyclic_report(const MixedMatroid& mm);
bool exists_acyclic_coherent(const MixedMatroid& mm);

// Enumeration-only versions, used as the cross-check for the shortcuts.
bool is_totally_cyclic_brute_force(const MixedMatroid& mm);
bool exists_acyclic_coherent_brute_force(const MixedMatroid& mm);

}  // namespace mixmat

#endif  // MIXMAT_MIXED_MATROID_H_
