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

#ifndef MIXMAT_GRAPH_ORIENTATION_H_
#define MIXMAT_GRAPH_ORIENTATION_H_

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "mixmat/mixed_graph.h"
#include "mixmat/mixed_matroid.h"
#include "mixmat/solver.h"

namespace mixmat {

// Signs for the undirected edges of a graph: +1 keeps the stored
// (tail, head) direction, -1 reverses it.
using GraphOrientation = Signature;

// An edge whose removal disconnects its endpoints.
struct BridgeCertificate {
  int edge = 0;
};

// A nonempty proper vertex set U such that every edge between U and the
// rest is directed out of U.
struct CutCertificate {
  std::vector<int> vertices;
};

// Edges forming a cycle that is directed in every orientation, in walking
// order.
struct CycleCertificate {
  std::vector<int> edges;
};

struct StrongOrientationResult {
  bool feasible = false;
  GraphOrientation orientation;
  std::variant<std::monostate, BridgeCertificate, CutCertificate> certificate;
};

struct AcyclicOrientationResult {
  bool feasible = false;
  GraphOrientation orientation;
  std::optional<CycleCertificate> certificate;
};

// Orients the undirected edges so the digraph is strongly connected, or
// certifies that no such orientation exists. Edges are fixed one at a time
// in index order, +1 first, keeping the partially oriented matroid totally
// cyclic. Throws InternalError if a result fails its own check.
StrongOrientationResult strong_orientation(const MixedGraph& g);

// Orients the undirected edges so the digraph is acyclic, or returns a cycle
// that stays directed whatever the orientation.
AcyclicOrientationResult acyclic_orientation(const MixedGraph& g);

bool verify_bridge(const MixedGraph& g, int edge);
bool verify_cut(const MixedGraph& g, const std::vector<int>& vertices);
bool verify_cycle(const MixedGraph& g, const std::vector<int>& edges);

struct VertexPairQuery {
  std::vector<std::pair<int, int>> pairs;
};

struct PairsOptions {
  SolverOptions solver;
  bool brute_force = false;
};

struct PairsOrientationResult {
  OrientationResult result;
  // The graph with one extra directed edge t -> s per pair, appended after
  // the original edges, and the set of those extra edges.
  MixedGraph augmented;
  PSet p;
  // Orientation of the original graph, when feasible.
  GraphOrientation orientation;
};

// Orients the undirected edges so that every pair (s, t) gets a directed
// s -> t path, through the matroid solver on the augmented graph. Throws
// InputError for s == t or unknown vertices.
PairsOrientationResult p_orientation_pairs(const MixedGraph& g, const VertexPairQuery& query,
                                           const PairsOptions& options = {});

}  // namespace mixmat

#endif  // MIXMAT_GRAPH_ORIENTATION_H_
