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

#ifndef MIXMAT_MIXED_GRAPH_H_
#define MIXMAT_MIXED_GRAPH_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mixmat/element_set.h"
#include "mixmat/mixed_matroid.h"
#include "mixmat/oriented_matroid.h"
#include "mixmat/signed_set.h"

namespace mixmat {

// A multigraph whose edges are either directed or undirected. An undirected
// edge still stores (tail, head): that pair is its reference orientation.
// Self-loops and parallel edges are allowed. Edge i is ground element i of
// the graphic matroid.
class MixedGraph {
 public:
  struct Edge {
    std::string id;
    int tail = 0;
    int head = 0;
    bool directed = true;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  MixedGraph() = default;
  explicit MixedGraph(std::vector<std::string> vertices);

  int add_vertex(std::string label);
  int add_edge(std::string id, int tail, int head, bool directed);
  int add_edge(std::string id, std::string_view tail, std::string_view head, bool directed);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
  const std::string& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }

  // Throw InputError for unknown labels.
  int vertex_index(std::string_view label) const;
  int edge_index(std::string_view id) const;
  bool has_edge(std::string_view id) const { return edge_index_.contains(std::string(id)); }

  ElementSet undirected_edges() const;
  std::vector<std::string> edge_ids() const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
};

// Every simple cycle (including 2-cycles of parallel edges and self-loops),
// signed by a traversal: +1 where the edge is walked tail to head, -1
// otherwise. One canonical representative per cycle. Throws CapacityError
// beyond kMaxElements edges.
std::vector<SignedSet> enumerate_cycles(const MixedGraph& g);

OrientedMatroid graphic_oriented_matroid(const MixedGraph& g);

// The graphic oriented matroid with the undirected edges as unsigned set.
MixedMatroid mixed_graphic_matroid(const MixedGraph& g);

// Small named instances shared by tests and documentation.
//   g1: the two-demand example. Directed a: v2->v1, b: v3->v2, p1: v1->v4,
//       c: v4->v5, d: v5->v6, p2: v6->v3; undirected e: v2-v5.
//   g2: g1 plus a second undirected edge e' parallel to e.
//   d2: directed d: u->v and undirected e: u-v.
//   t3: directed triangle f1: v1->v2, f2: v2->v3, f3: v3->v1.
//   u3: the same triangle with all edges undirected.
namespace fixtures {
MixedGraph g1();
MixedGraph g2();
MixedGraph d2();
MixedGraph t3();
MixedGraph u3();
}  // namespace fixtures

}  // namespace mixmat

#endif  // MIXMAT_MIXED_GRAPH_H_
