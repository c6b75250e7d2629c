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

#include "mixmat/digraph.h"

#include <algorithm>
#include <numeric>

#include "mixmat/errors.h"

namespace mixmat::digraph {
namespace {

std::vector<bool> reach_from(int n, std::span<const Arc> arcs, int from, bool reverse) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (const Arc& a : arcs) {
    if (reverse) {
      out[static_cast<std::size_t>(a.head)].push_back(a.tail);
    } else {
      out[static_cast<std::size_t>(a.tail)].push_back(a.head);
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : out[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool reachable(int vertex_count, std::span<const Arc> arcs, int from, int to) {
  return reach_from(vertex_count, arcs, from, false)[static_cast<std::size_t>(to)];
}

bool is_strongly_connected(int vertex_count, std::span<const Arc> arcs) {
  if (vertex_count <= 1) return true;
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(reach_from(vertex_count, arcs, 0, false)) && all(reach_from(vertex_count, arcs, 0, true));
}

std::optional<std::vector<int>> find_directed_cycle(int vertex_count, std::span<const Arc> arcs) {
  const auto n = static_cast<std::size_t>(vertex_count);
  std::vector<std::vector<int>> out(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out[static_cast<std::size_t>(arcs[i].tail)].push_back(static_cast<int>(i));
  }
  enum Color : unsigned char { kWhite, kGray, kBlack };
  std::vector<Color> color(n, kWhite);
  std::vector<int> arc_into(n, -1);

  struct Frame {
    int vertex;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != kWhite) continue;
    std::vector<Frame> stack{{static_cast<int>(root), 0}};
    color[root] = kGray;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto v = static_cast<std::size_t>(top.vertex);
      if (top.next == out[v].size()) {
        color[v] = kBlack;
        stack.pop_back();
        continue;
      }
      const int arc = out[v][top.next++];
      const auto w = static_cast<std::size_t>(arcs[static_cast<std::size_t>(arc)].head);
      if (color[w] == kGray) {
        // Back arc closes a cycle through the gray path from w to v.
        std::vector<int> cycle{arc};
        for (std::size_t u = v; u != w;) {
          const int in = arc_into[u];
          cycle.push_back(in);
          u = static_cast<std::size_t>(arcs[static_cast<std::size_t>(in)].tail);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[w] == kWhite) {
        color[w] = kGray;
        arc_into[w] = arc;
        stack.push_back({static_cast<int>(w), 0});
      }
    }
  }
  return std::nullopt;
}

std::vector<int> component_ids(int vertex_count, std::span<const Arc> arcs) {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Arc& a : arcs) parent[static_cast<std::size_t>(find(a.tail))] = find(a.head);
  std::vector<int> ids(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) ids[static_cast<std::size_t>(v)] = find(v);
  return ids;
}

std::vector<Arc> oriented_arcs(const MixedGraph& g, const Signature& orientation) {
  if (!g.undirected_edges().subset_of(orientation.domain)) {
    throw InputError("orientation does not cover every undirected edge");
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (!e.directed && orientation.flipped.contains(i)) {
      arcs.push_back({e.head, e.tail});
    } else {
      arcs.push_back({e.tail, e.head});
    }
  }
  return arcs;
}

std::vector<Arc> directed_arcs(const MixedGraph& g, std::vector<int>* edge_of_arc) {
  std::vector<Arc> arcs;
  if (edge_of_arc != nullptr) edge_of_arc->clear();
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (!e.directed) continue;
    arcs.push_back({e.tail, e.head});
    if (edge_of_arc != nullptr) edge_of_arc->push_back(i);
  }
  return arcs;
}

}  // namespace mixmat::digraph
