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

#ifndef MIXMAT_SIGNED_SET_H_
#define MIXMAT_SIGNED_SET_H_

#include <compare>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mixmat/element_set.h"

namespace mixmat {

// Labelled ground set {0, ..., n-1}.
class GroundSet {
 public:
  GroundSet() = default;
  // Throws InputError on empty or duplicate labels and CapacityError when
  // there are more than kMaxElements labels.
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  ElementSet all() const { return ElementSet::range(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

  // Throws InputError for an unknown label.
  int index_of(std::string_view label) const;
  bool has_label(std::string_view label) const;
  ElementSet subset_of_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;

  // The ground set with `removed` dropped; surviving labels keep their order.
  GroundSet without(ElementSet removed) const;

  // Throws InputError unless s is a subset of {0, ..., n-1}.
  void check_subset(ElementSet s, std::string_view what) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// A map from the ground set to {+1, -1, 0}, stored as its positive and
// negative parts. plus and minus are disjoint.
struct SignedSet {
  ElementSet plus;
  ElementSet minus;

  ElementSet support() const { return plus | minus; }
  bool empty() const { return support().empty(); }
  int sign(int i) const { return plus.contains(i) ? 1 : (minus.contains(i) ? -1 : 0); }
  SignedSet negated() const { return {minus, plus}; }

  // The representative of {X, -X} with sign +1 on the smallest support
  // element. The empty set is its own representative.
  SignedSet canonical() const {
    if (empty()) return *this;
    return plus.contains(support().min()) ? *this : negated();
  }
  bool is_canonical() const { return empty() || plus.contains(support().min()); }

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
  friend auto operator<=>(const SignedSet&, const SignedSet&) = default;
};

// X restricted to the complement of `erased`: equal to X off `erased`, zero on it.
SignedSet restrict(const SignedSet& x, ElementSet erased);

// X with its signs flipped on `flip`.
SignedSet negate_on(const SignedSet& x, ElementSet flip);

// True when the supports are disjoint or the products of signs over the
// common support take both values +1 and -1.
bool is_orthogonal(const SignedSet& x, const SignedSet& y);

// "a:+ c:+ e:-" style rendering for diagnostics.
std::string to_string(const SignedSet& x, const GroundSet& ground);

}  // namespace mixmat

#endif  // MIXMAT_SIGNED_SET_H_
