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

#ifndef MIXMAT_ORIENTED_MATROID_H_
#define MIXMAT_ORIENTED_MATROID_H_

#include <span>
#include <string>
#include <vector>

#include "mixmat/element_set.h"
#include "mixmat/signed_set.h"

namespace mixmat {

// An oriented matroid given by its explicit list of signed circuits.
//
// Only one representative per {C, -C} pair is stored (the canonical one, see
// SignedSet::canonical), sorted, so two matroids over the same labels are
// equal iff their circuit lists are equal. The constructor canonicalizes but
// does not check the circuit axioms; use make_oriented_matroid for untrusted
// input.
class OrientedMatroid {
 public:
  OrientedMatroid() = default;
  // Throws InputError for circuits outside the ground set or with
  // overlapping plus/minus parts, CapacityError past kMaxCircuits.
  OrientedMatroid(GroundSet ground, std::vector<SignedSet> circuits);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const std::vector<SignedSet>& circuits() const { return circuits_; }
  // Both members of every +/- pair.
  std::vector<SignedSet> signed_circuits() const;

  friend bool operator==(const OrientedMatroid&, const OrientedMatroid&) = default;

 private:
  GroundSet ground_;
  std::vector<SignedSet> circuits_;
};

enum class AxiomKind {
  kEmptySupport,
  kMissingNegation,
  kNestedSupports,
  kElimination,
  kMalformed,
};

struct AxiomViolation {
  AxiomKind kind;
  std::string detail;
};

using AxiomReport = std::vector<AxiomViolation>;

const char* to_string(AxiomKind kind);

// Checks the signed circuit axioms on `candidate` exactly as given (it is
// not closed under negation first). An empty report means the candidate is
// the full signed circuit set of an oriented matroid.
AxiomReport verify_circuit_axioms(std::span<const SignedSet> candidate, const GroundSet& ground);

// Closes `circuits` under negation, verifies the axioms and builds the
// matroid. Throws InputError naming the first violation.
OrientedMatroid make_oriented_matroid(GroundSet ground, std::vector<SignedSet> circuits);

// The unsigned matroid underneath an oriented matroid.
class UnderlyingMatroid {
 public:
  // Throws InputError if the maximal independent sets are not equicardinal.
  explicit UnderlyingMatroid(const OrientedMatroid& om);

  int rank() const { return rank_; }
  const std::vector<ElementSet>& bases() const { return bases_; }
  const std::vector<ElementSet>& circuit_supports() const { return supports_; }
  bool is_independent(ElementSet s) const;

 private:
  int rank_ = 0;
  std::vector<ElementSet> bases_;
  std::vector<ElementSet> supports_;
};

// The dual oriented matroid: its circuits are the signed cocircuits of om.
// Throws InputError when some cocircuit support admits zero or several sign
// patterns orthogonal to all circuits.
OrientedMatroid dual(const OrientedMatroid& om);

// Reverses the elements of `flip`.
OrientedMatroid reorient(const OrientedMatroid& om, ElementSet flip);

// Minors. The result lives on ground \ removed, re-indexed with compress().
OrientedMatroid deletion(const OrientedMatroid& om, ElementSet removed);
OrientedMatroid contraction(const OrientedMatroid& om, ElementSet removed);

// Circuits with no negative element (in either representative).
bool is_positive_circuit(const SignedSet& c);
std::vector<SignedSet> positive_circuits(const OrientedMatroid& om);

bool is_acyclic(const OrientedMatroid& om);
bool is_totally_cyclic(const OrientedMatroid& om);

// Elements lying in no circuit / forming a one-element circuit.
ElementSet coloops(const OrientedMatroid& om);
ElementSet loops(const OrientedMatroid& om);

}  // namespace mixmat

#endif  // MIXMAT_ORIENTED_MATROID_H_
