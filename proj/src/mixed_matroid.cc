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

#include "mixmat/mixed_matroid.h"

#include <algorithm>
#include <string>
#include <utility>

#include "mixmat/errors.h"

namespace mixmat {

MixedMatroid::MixedMatroid(OrientedMatroid om, ElementSet unsigned_elements)
    : om_(std::move(om)), unsigned_(unsigned_elements) {
  om_.ground().check_subset(unsigned_, "unsigned set");
}

MixedMatroid make_mixed(OrientedMatroid om, ElementSet unsigned_elements) {
  return MixedMatroid(std::move(om), unsigned_elements);
}

std::vector<MixedCircuit> mixed_circuits(const MixedMatroid& mm) {
  const ElementSet a = mm.unsigned_elements();
  std::vector<MixedCircuit> out;
  out.reserve(mm.oriented().circuits().size());
  for (const SignedSet& c : mm.oriented().circuits()) {
    out.push_back({restrict(c, a).canonical(), c.support() & a});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_positive(const MixedCircuit& mc) { return mc.signed_part.minus.empty(); }

MixedMatroid apply_signature(const MixedMatroid& mm, const Signature& s) {
  if (!s.flipped.subset_of(s.domain)) {
    throw InputError("signature flips an element outside its domain");
  }
  if (!s.domain.subset_of(mm.unsigned_elements())) {
    throw InputError("signature assigns a sign to an element that is not unsigned");
  }
  return MixedMatroid(reorient(mm.oriented(), s.flipped), mm.unsigned_elements() - s.domain);
}

CoherentOrientations::CoherentOrientations(ElementSet unsigned_elements)
    : domain_(unsigned_elements), elements_(unsigned_elements.to_vector()) {
  if (unsigned_elements.size() > kMaxElements) {
    throw CapacityError("too many unsigned elements to enumerate orientations");
  }
}

Signature CoherentOrientations::at(std::uint64_t k) const {
  Signature s{domain_, {}};
  const std::size_t m = elements_.size();
  for (std::size_t j = 0; j < m; ++j) {
    if ((k >> (m - 1 - j)) & 1U) s.flipped.insert(elements_[j]);
  }
  return s;
}

CoherentOrientations coherent_orientations(const MixedMatroid& mm) {
  return CoherentOrientations(mm.unsigned_elements());
}

MixedMatroid deletion(const MixedMatroid& mm, ElementSet removed) {
  return MixedMatroid(deletion(mm.oriented(), removed),
                      compress(mm.unsigned_elements() - removed, removed));
}

MixedMatroid contraction(const MixedMatroid& mm, ElementSet removed) {
  return MixedMatroid(contraction(mm.oriented(), removed),
                      compress(mm.unsigned_elements() - removed, removed));
}

MixedMatroid dual(const MixedMatroid& mm) {
  return MixedMatroid(dual(mm.oriented()), mm.unsigned_elements());
}

bool is_totally_cyclic_brute_force(const MixedMatroid& mm) {
  const CoherentOrientations all = coherent_orientations(mm);
  return std::any_of(all.begin(), all.end(), [&](const Signature& s) {
    return is_totally_cyclic(reorient(mm.oriented(), s.flipped));
  });
}

bool exists_acyclic_coherent_brute_force(const MixedMatroid& mm) {
  const CoherentOrientations all = coherent_orientations(mm);
  return std::any_of(all.begin(), all.end(), [&](const Signature& s) {
    return is_acyclic(reorient(mm.oriented(), s.flipped));
  });
}

CyclicityReport totally_cyclic_report(const MixedMatroid& mm) {
  if (coloops(mm.oriented()).empty()) {
    return {is_totally_cyclic(contraction(mm.oriented(), mm.unsigned_elements())),
            DecisionMethod::kShortcut};
  }
  return {is_totally_cyclic_brute_force(mm), DecisionMethod::kBruteForce};
}

bool is_totally_cyclic(const MixedMatroid& mm) { return totally_cyclic_report(mm).value; }

CyclicityReport acyclic_report(const MixedMatroid& mm) {
  if (loops(mm.oriented()).empty()) {
    return {is_acyclic(deletion(mm.oriented(), mm.unsigned_elements())),
            DecisionMethod::kShortcut};
  }
  return {exists_acyclic_coherent_brute_force(mm), DecisionMethod::kBruteForce};
}

bool exists_acyclic_coherent(const MixedMatroid& mm) { return acyclic_report(mm).value; }

}  // namespace mixmat
