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

#include "mixmat/signed_set.h"

#include <string>
#include <utility>

#include "mixmat/errors.h"

namespace mixmat {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxElements)) {
    throw CapacityError("ground set has " + std::to_string(labels_.size()) +
                        " elements; at most " + std::to_string(kMaxElements) +
                        " are supported");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty element label");
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
      throw InputError("duplicate element label '" + labels_[i] + "'");
    }
  }
}

int GroundSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw InputError("unknown element label '" + std::string(label) + "'");
  }
  return it->second;
}

bool GroundSet::has_label(std::string_view label) const {
  return index_.contains(std::string(label));
}

ElementSet GroundSet::subset_of_labels(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (int i : s) out.push_back(label(i));
  return out;
}

GroundSet GroundSet::without(ElementSet removed) const {
  std::vector<std::string> kept;
  for (int i = 0; i < size(); ++i) {
    if (!removed.contains(i)) kept.push_back(labels_[static_cast<std::size_t>(i)]);
  }
  return GroundSet(std::move(kept));
}

void GroundSet::check_subset(ElementSet s, std::string_view what) const {
  if (!s.subset_of(all())) {
    throw InputError(std::string(what) + " contains an index outside the ground set of size " +
                     std::to_string(size()));
  }
}

SignedSet restrict(const SignedSet& x, ElementSet erased) {
  return {x.plus - erased, x.minus - erased};
}

SignedSet negate_on(const SignedSet& x, ElementSet flip) {
  return {(x.plus - flip) | (x.minus & flip), (x.minus - flip) | (x.plus & flip)};
}

bool is_orthogonal(const SignedSet& x, const SignedSet& y) {
  const ElementSet agree = (x.plus & y.plus) | (x.minus & y.minus);
  const ElementSet disagree = (x.plus & y.minus) | (x.minus & y.plus);
  return agree.empty() == disagree.empty();
}

std::string to_string(const SignedSet& x, const GroundSet& ground) {
  std::string out = "(";
  bool first = true;
  for (int i : x.support()) {
    if (!first) out += ", ";
    first = false;
    out += i < ground.size() ? ground.label(i) : "#" + std::to_string(i);
    out += x.plus.contains(i) ? ":+" : ":-";
  }
  return out + ")";
}

}  // namespace mixmat
