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

#include "mixmat/mixed_graph.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "mixmat/errors.h"
#include "mixmat/oriented_matroid.h"
#include "support/oracles.h"

namespace mixmat {
namespace {

SignedSet signed_edges(const MixedGraph& g, std::initializer_list<const char*> plus,
                       std::initializer_list<const char*> minus) {
  SignedSet s;
  for (const char* id : plus) s.plus.insert(g.edge_index(id));
  for (const char* id : minus) s.minus.insert(g.edge_index(id));
  return s.canonical();
}

TEST(MixedGraph, RejectsBadInput) {
  MixedGraph g({"u", "v"});
  EXPECT_THROW(MixedGraph({"u", "u"}), InputError);
  EXPECT_THROW(g.add_edge("x", "u", "w", true), InputError);
  g.add_edge("x", "u", "v", true);
  EXPECT_THROW(g.add_edge("x", "v", "u", true), InputError);
  EXPECT_THROW(g.add_edge("y", 0, 7, true), InputError);
}

TEST(EnumerateCycles, TwoDemandGraph) {
  const MixedGraph g = fixtures::g1();
  std::vector<SignedSet> expected{
      signed_edges(g, {"p1", "c", "a"}, {"e"}),
      signed_edges(g, {"p2", "b", "e", "d"}, {}),
      signed_edges(g, {"a", "b", "c", "d", "p1", "p2"}, {}),
  };
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(enumerate_cycles(g), expected);
}

TEST(EnumerateCycles, SmallFixtures) {
  const MixedGraph t3 = fixtures::t3();
  EXPECT_EQ(enumerate_cycles(t3), (std::vector<SignedSet>{signed_edges(t3, {"f1", "f2", "f3"}, {})}));
  const MixedGraph d2 = fixtures::d2();
  EXPECT_EQ(enumerate_cycles(d2), (std::vector<SignedSet>{signed_edges(d2, {"d"}, {"e"})}));
}

TEST(EnumerateCycles, SelfLoopsAndParallelEdges) {
  MixedGraph g({"u", "v"});
  g.add_edge("l", 0, 0, false);
  g.add_edge("x", 0, 1, true);
  g.add_edge("y", 1, 0, true);
  const std::vector<SignedSet> cycles = enumerate_cycles(g);
  EXPECT_EQ(cycles, (std::vector<SignedSet>{signed_edges(g, {"l"}, {}), signed_edges(g, {"x", "y"}, {})}));
}

TEST(EnumerateCycles, RejectsTooManyEdges) {
  MixedGraph g({"u", "v"});
  for (int i = 0; i <= kMaxElements; ++i) g.add_edge("x" + std::to_string(i), 0, 1, false);
  EXPECT_THROW(enumerate_cycles(g), CapacityError);
}

TEST(EnumerateCycles, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const MixedGraph g = testing::random_mixed_graph(rng, {});
    ASSERT_EQ(enumerate_cycles(g), testing::cycles_by_subsets(g)) << trial;
  }
}

TEST(GraphicMatroid, Fixtures) {
  const OrientedMatroid om = graphic_oriented_matroid(fixtures::g1());
  EXPECT_EQ(om.circuits().size(), 3u);
  EXPECT_EQ(om.ground().labels(), fixtures::g1().edge_ids());

  const MixedGraph d2 = fixtures::d2();
  EXPECT_EQ(dual(graphic_oriented_matroid(d2)).circuits(),
            (std::vector<SignedSet>{signed_edges(d2, {"d", "e"}, {})}));
}

TEST(GraphicMatroid, CocircuitsAreSignedBonds) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const MixedGraph g = testing::random_mixed_graph(rng, {});
    ASSERT_EQ(dual(graphic_oriented_matroid(g)).circuits(), testing::bonds_by_vertex_cuts(g)) << trial;
  }
}

TEST(MixedGraphicMatroid, UnsignedSetIsTheUndirectedEdges) {
  const MixedMatroid g1 = mixed_graphic_matroid(fixtures::g1());
  EXPECT_EQ(g1.unsigned_elements(), ElementSet{g1.ground().index_of("e")});
  EXPECT_TRUE(mixed_graphic_matroid(fixtures::t3()).unsigned_elements().empty());
  EXPECT_EQ(mixed_graphic_matroid(fixtures::u3()).unsigned_elements(), ElementSet::range(3));
}

}  // namespace
}  // namespace mixmat
