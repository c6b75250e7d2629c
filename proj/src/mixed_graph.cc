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
#include <string>
#include <utility>

#include "mixmat/errors.h"

namespace mixmat {

MixedGraph::MixedGraph(std::vector<std::string> vertices) {
  for (auto& v : vertices) add_vertex(std::move(v));
}

int MixedGraph::add_vertex(std::string label) {
  if (label.empty()) throw InputError("empty vertex label");
  const int index = vertex_count();
  if (!vertex_index_.emplace(label, index).second) {
    throw InputError("duplicate vertex '" + label + "'");
  }
  vertices_.push_back(std::move(label));
  return index;
}

int MixedGraph::add_edge(std::string id, int tail, int head, bool directed) {
  if (id.empty()) throw InputError("empty edge id");
  if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count()) {
    throw InputError("edge '" + id + "' has an endpoint outside the vertex set");
  }
  const int index = edge_count();
  if (!edge_index_.emplace(id, index).second) {
    throw InputError("duplicate edge id '" + id + "'");
  }
  edges_.push_back({std::move(id), tail, head, directed});
  return index;
}

int MixedGraph::add_edge(std::string id, std::string_view tail, std::string_view head,
                         bool directed) {
  return add_edge(std::move(id), vertex_index(tail), vertex_index(head), directed);
}

int MixedGraph::vertex_index(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  if (it == vertex_index_.end()) throw InputError("unknown vertex '" + std::string(label) + "'");
  return it->second;
}

int MixedGraph::edge_index(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) throw InputError("unknown edge '" + std::string(id) + "'");
  return it->second;
}

ElementSet MixedGraph::undirected_edges() const {
  ElementSet out;
  for (int i = 0; i < edge_count(); ++i) {
    if (!edges_[static_cast<std::size_t>(i)].directed) out.insert(i);
  }
  return out;
}

std::vector<std::string> MixedGraph::edge_ids() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.id);
  return out;
}

namespace {

class CycleSearch {
 public:
  explicit CycleSearch(const MixedGraph& g) : g_(g), incident_(static_cast<std::size_t>(g.vertex_count())) {
    for (int i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edge(i);
      if (e.tail == e.head) continue;
      incident_[static_cast<std::size_t>(e.tail)].push_back(i);
      incident_[static_cast<std::size_t>(e.head)].push_back(i);
    }
  }

  std::vector<SignedSet> run() {
    for (int i = 0; i < g_.edge_count(); ++i) {
      if (g_.edge(i).tail == g_.edge(i).head) found_.push_back({ElementSet::single(i), {}});
    }
    for (int s = 0; s < g_.vertex_count(); ++s) {
      start_ = s;
      visited_ = std::vector<bool>(static_cast<std::size_t>(g_.vertex_count()), false);
      visited_[static_cast<std::size_t>(s)] = true;
      walk(s, SignedSet{});
    }
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return found_;
  }

 private:
  // Extends a path from start_ that uses only vertices greater than start_.
  void walk(int v, SignedSet path) {
    for (int i : incident_[static_cast<std::size_t>(v)]) {
      if (path.support().contains(i)) continue;
      const auto& e = g_.edge(i);
      const int w = e.tail == v ? e.head : e.tail;
      SignedSet next = path;
      if (e.tail == v) {
        next.plus.insert(i);
      } else {
        next.minus.insert(i);
      }
      if (w == start_) {
        found_.push_back(next.canonical());
      } else if (w > start_ && !visited_[static_cast<std::size_t>(w)]) {
        visited_[static_cast<std::size_t>(w)] = true;
        walk(w, next);
        visited_[static_cast<std::size_t>(w)] = false;
      }
    }
  }

  const MixedGraph& g_;
  std::vector<std::vector<int>> incident_;
  std::vector<bool> visited_;
  std::vector<SignedSet> found_;
  int start_ = 0;
};

}  // namespace

std::vector<SignedSet> enumerate_cycles(const MixedGraph& g) {
  if (g.edge_count() > kMaxElements) {
    throw CapacityError("graph has " + std::to_string(g.edge_count()) + " edges; at most " +
                        std::to_string(kMaxElements) + " are supported");
  }
  return CycleSearch(g).run();
}

OrientedMatroid graphic_oriented_matroid(const MixedGraph& g) {
  std::vector<SignedSet> cycles = enumerate_cycles(g);
  return OrientedMatroid(GroundSet(g.edge_ids()), std::move(cycles));
}

MixedMatroid mixed_graphic_matroid(const MixedGraph& g) {
  return make_mixed(graphic_oriented_matroid(g), g.undirected_edges());
}

namespace fixtures {

MixedGraph g1() {
  MixedGraph g({"v1", "v2", "v3", "v4", "v5", "v6"});
  g.add_edge("a", "v2", "v1", true);
  g.add_edge("b", "v3", "v2", true);
  g.add_edge("p1", "v1", "v4", true);
  g.add_edge("c", "v4", "v5", true);
  g.add_edge("d", "v5", "v6", true);
  g.add_edge("p2", "v6", "v3", true);
  g.add_edge("e", "v2", "v5", false);
  return g;
}

MixedGraph g2() {
  MixedGraph g = g1();
  g.add_edge("e'", "v2", "v5", false);
  return g;
}

MixedGraph d2() {
  MixedGraph g({"u", "v"});
  g.add_edge("d", "u", "v", true);
  g.add_edge("e", "u", "v", false);
  return g;
}

MixedGraph t3() {
  MixedGraph g({"v1", "v2", "v3"});
  g.add_edge("f1", "v1", "v2", true);
  g.add_edge("f2", "v2", "v3", true);
  g.add_edge("f3", "v3", "v1", true);
  return g;
}

MixedGraph u3() {
  MixedGraph g({"v1", "v2", "v3"});
  g.add_edge("f1", "v1", "v2", false);
  g.add_edge("f2", "v2", "v3", false);
  g.add_edge("f3", "v3", "v1", false);
  return g;
}

}  // namespace fixtures
}  // namespace mixmat
