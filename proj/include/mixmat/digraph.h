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

#ifndef MIXMAT_DIGRAPH_H_
#define MIXMAT_DIGRAPH_H_

#include <optional>
#include <span>
#include <vector>

#include "mixmat/mixed_graph.h"
#include "mixmat/mixed_matroid.h"

// Plain digraph routines on vertex indices. They never go through the
// matroid layer, so they serve as independent checks of it.
namespace mixmat::digraph {

struct Arc {
  int tail = 0;
  int head = 0;
};

bool reachable(int vertex_count, std::span<const Arc> arcs, int from, int to);

// Every vertex reaches every other. True for zero or one vertex.
bool is_strongly_connected(int vertex_count, std::span<const Arc> arcs);

// Indices of the arcs of some directed cycle, in walking order.
std::optional<std::vector<int>> find_directed_cycle(int vertex_count, std::span<const Arc> arcs);

// Connected components of the underlying undirected multigraph.
std::vector<int> component_ids(int vertex_count, std::span<const Arc> arcs);

// Arc i is edge i of g: directed edges as stored, undirected edges along
// their reference orientation unless `orientation` flips them. Throws
// InputError if the orientation does not cover every undirected edge.
std::vector<Arc> oriented_arcs(const MixedGraph& g, const Signature& orientation);

// Arcs of the directed edges only, with the edge index of each arc.
std::vector<Arc> directed_arcs(const MixedGraph& g, std::vector<int>* edge_of_arc);

}  // namespace mixmat::digraph

#endif  // MIXMAT_DIGRAPH_H_
