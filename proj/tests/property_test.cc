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

// Randomized invariants over small mixed graphs. Each test draws its own
// population from a fixed seed so failures reproduce.

#include <random>

#include "gtest/gtest.h"
#include "mixmat/mixed_graph.h"
#include "mixmat/mixed_matroid.h"
#include "mixmat/oriented_matroid.h"
#include "mixmat/solver.h"
#include "support/oracles.h"

namespace mixmat {
namespace {

constexpr int kTrials = 150;

ElementSet random_subset(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint32_t> pick(0, (std::uint32_t{1} << n) - 1);
  return ElementSet(pick(rng));
}

TEST(Property, MinorsDualsAndReorientationsSatisfyTheAxioms) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < kTrials; ++trial) {
    const OrientedMatroid om = graphic_oriented_matroid(testing::random_mixed_graph(rng, {}));
    const ElementSet x = random_subset(rng, om.size());
    for (const OrientedMatroid& m : {om, dual(om), deletion(om, x), contraction(om, x), reorient(om, x)}) {
      ASSERT_TRUE(verify_circuit_axioms(m.signed_circuits(), m.ground()).empty()) << trial;
    }
  }
}

TEST(Property, CircuitsAreOrthogonalToCocircuits) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < kTrials; ++trial) {
    const OrientedMatroid om = graphic_oriented_matroid(testing::random_mixed_graph(rng, {}));
    const OrientedMatroid co = dual(om);
    for (const SignedSet& c : om.circuits()) {
      for (const SignedSet& d : co.circuits()) ASSERT_TRUE(is_orthogonal(c, d)) << trial;
    }
  }
}

TEST(Property, MixedMinorsCommuteWithDuality) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < kTrials; ++trial) {
    const MixedMatroid mm = mixed_graphic_matroid(testing::random_mixed_graph(rng, {}));
    const ElementSet x = random_subset(rng, mm.ground().size());
    ASSERT_EQ(dual(deletion(mm, x)), contraction(dual(mm), x)) << trial;
    ASSERT_EQ(dual(dual(mm)), mm) << trial;
  }
}

TEST(Property, PConnectivityIsMonotoneUnderContractionOfUnsignedElements) {
  std::mt19937_64 rng(44);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < kTrials; ++trial) {
    ElementSet p_edges;
    const MixedGraph g = testing::augment(testing::random_pair_instance(rng, {}), &p_edges);
    const MixedMatroid mm = mixed_graphic_matroid(g);
    const PSet p{p_edges};
    if (!is_p_connected(mm, p)) continue;
    ++checked;
    for (int a : mm.unsigned_elements()) {
      const ElementSet removed = ElementSet::single(a);
      ASSERT_TRUE(is_p_connected(contraction(mm, removed), PSet{compress(p_edges, removed)})) << trial;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Property, FacetCriterionMatchesPConnectivity) {
  std::mt19937_64 rng(45);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < kTrials; ++trial) {
    ElementSet p_edges;
    const MixedGraph g = testing::augment(testing::random_pair_instance(rng, {}), &p_edges);
    const MixedMatroid mm = mixed_graphic_matroid(g);
    const PSet p{p_edges};
    if (!is_p_connected(mm, p)) continue;
    ++checked;
    for (const Signature& s : coherent_orientations(mm)) {
      const MixedMatroid applied = apply_signature(mm, s);
      ASSERT_EQ(check_facet_criterion(applied.oriented(), p), is_p_connected(applied, p)) << trial;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Property, CoherentOrientationsAreDistinctAndFull) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < kTrials; ++trial) {
    const MixedMatroid mm = mixed_graphic_matroid(testing::random_mixed_graph(rng, {}));
    std::vector<std::uint32_t> seen;
    for (const Signature& s : coherent_orientations(mm)) {
      ASSERT_EQ(s.domain, mm.unsigned_elements());
      ASSERT_TRUE(s.flipped.subset_of(s.domain));
      seen.push_back(s.flipped.bits());
    }
    std::sort(seen.begin(), seen.end());
    ASSERT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
    ASSERT_EQ(seen.size(), coherent_orientations(mm).size());
  }
}

}  // namespace
}  // namespace mixmat
