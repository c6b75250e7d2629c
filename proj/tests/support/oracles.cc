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

#include "support/oracles.h"

#include <algorithm>
#include <string>

namespace mixmat::testing {

Closure closure(int n, const ArcList& arcs) {
  const auto size = static_cast<std::size_t>(n);
  Closure reach(size, std::vector<bool>(size, false));
  for (const auto& [u, v] : arcs) reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

ArcList orient(const MixedGraph& g, std::uint32_t reversed) {
  ArcList arcs;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const bool flip = !e.directed && ((reversed >> i) & 1U);
    arcs.emplace_back(flip ? e.head : e.tail, flip ? e.tail : e.head);
  }
  return arcs;
}

bool strongly_connected(int n, const ArcList& arcs) {
  const Closure reach = closure(n, arcs);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && !reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

bool has_directed_cycle(int n, const ArcList& arcs) {
  const Closure reach = closure(n, arcs);
  for (int v = 0; v < n; ++v) {
    if (reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]) return true;
  }
  return false;
}

bool connected_ignoring_direction(const MixedGraph& g, int skip_edge) {
  ArcList arcs;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == skip_edge) continue;
    arcs.emplace_back(g.edge(i).tail, g.edge(i).head);
    arcs.emplace_back(g.edge(i).head, g.edge(i).tail);
  }
  return strongly_connected(g.vertex_count(), arcs);
}

std::vector<SignedSet> cycles_by_subsets(const MixedGraph& g) {
  const int m = g.edge_count();
  std::vector<SignedSet> out;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << m); ++s) {
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> edges;
    for (int i = 0; i < m; ++i) {
      if (!((s >> i) & 1U)) continue;
      edges.push_back(i);
      ++degree[static_cast<std::size_t>(g.edge(i).tail)];
      ++degree[static_cast<std::size_t>(g.edge(i).head)];
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 0 && d != 2; })) continue;

    // Walk from the first edge; a cycle iff the walk uses every edge.
    SignedSet walk;
    std::vector<bool> used(edges.size(), false);
    int at = g.edge(edges[0]).head;
    const int start = g.edge(edges[0]).tail;
    walk.plus.insert(edges[0]);
    used[0] = true;
    std::size_t count = 1;
    while (at != start || count == 0) {
      bool moved = false;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (used[k]) continue;
        const auto& e = g.edge(edges[k]);
        if (e.tail == at) {
          walk.plus.insert(edges[k]);
          at = e.head;
        } else if (e.head == at) {
          walk.minus.insert(edges[k]);
          at = e.tail;
        } else {
          continue;
        }
        used[k] = true;
        ++count;
        moved = true;
        break;
      }
      if (!moved) break;
    }
    if (at == start && count == edges.size()) out.push_back(walk.canonical());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedSet> bonds_by_vertex_cuts(const MixedGraph& g) {
  const int n = g.vertex_count();
  std::vector<SignedSet> cuts;
  for (std::uint32_t u = 1; u + 1 < (std::uint32_t{1} << n); ++u) {
    SignedSet cut;
    for (int i = 0; i < g.edge_count(); ++i) {
      const bool tail_in = (u >> g.edge(i).tail) & 1U;
      const bool head_in = (u >> g.edge(i).head) & 1U;
      if (tail_in && !head_in) cut.plus.insert(i);
      if (!tail_in && head_in) cut.minus.insert(i);
    }
    if (!cut.empty()) cuts.push_back(cut.canonical());
  }
  std::vector<SignedSet> out;
  for (const SignedSet& c : cuts) {
    const bool minimal = std::none_of(cuts.begin(), cuts.end(), [&](const SignedSet& o) {
      return o.support() != c.support() && o.support().subset_of(c.support());
    });
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <typename Pred>
bool any_orientation(const MixedGraph& g, Pred pred) {
  const std::uint32_t undirected = g.undirected_edges().bits();
  // Enumerate subsets of the undirected mask.
  std::uint32_t sub = 0;
  while (true) {
    if (pred(orient(g, sub))) return true;
    if (sub == undirected) return false;
    sub = (sub - undirected) & undirected;
  }
}

}  // namespace

bool some_orientation_strongly_connected(const MixedGraph& g) {
  return any_orientation(g, [&](const ArcList& arcs) { return strongly_connected(g.vertex_count(), arcs); });
}

bool some_orientation_acyclic(const MixedGraph& g) {
  return any_orientation(g, [&](const ArcList& arcs) { return !has_directed_cycle(g.vertex_count(), arcs); });
}

bool some_orientation_connects(const MixedGraph& g, const std::vector<std::pair<int, int>>& pairs) {
  return any_orientation(g, [&](const ArcList& arcs) {
    const Closure reach = closure(g.vertex_count(), arcs);
    return std::all_of(pairs.begin(), pairs.end(), [&](const auto& pr) {
      return reach[static_cast<std::size_t>(pr.first)][static_cast<std::size_t>(pr.second)];
    });
  });
}

bool two_edge_connected(const MixedGraph& g) {
  if (!connected_ignoring_direction(g)) return false;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!connected_ignoring_direction(g, i)) return false;
  }
  return true;
}

bool has_out_cut(const MixedGraph& g) {
  const int n = g.vertex_count();
  for (std::uint32_t u = 1; u + 1 < (std::uint32_t{1} << n); ++u) {
    bool all_out = true;
    for (const auto& e : g.edges()) {
      const bool tail_in = (u >> e.tail) & 1U;
      const bool head_in = (u >> e.head) & 1U;
      if (tail_in == head_in) continue;
      if (!e.directed || !tail_in) {
        all_out = false;
        break;
      }
    }
    if (all_out) return true;
  }
  return false;
}

bool contraction_strongly_connected(const MixedGraph& g) {
  // Undirected edges become two opposite arcs, which is the same as
  // contracting them as far as strong connectivity is concerned.
  ArcList arcs;
  for (const auto& e : g.edges()) {
    arcs.emplace_back(e.tail, e.head);
    if (!e.directed) arcs.emplace_back(e.head, e.tail);
  }
  return strongly_connected(g.vertex_count(), arcs);
}

MixedGraph random_mixed_graph(std::mt19937_64& rng, const GraphShape& shape) {
  std::uniform_int_distribution<int> vertex_count(shape.min_vertices, shape.max_vertices);
  const int n = vertex_count(rng);
  std::uniform_int_distribution<int> edge_count(shape.min_edges, shape.max_edges);
  const int m = edge_count(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::bernoulli_distribution directed(shape.directed_probability);
  std::bernoulli_distribution loop(shape.loop_probability);

  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("w" + std::to_string(v));
  MixedGraph g(labels);
  std::vector<bool> is_directed;
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < m; ++i) {
    const int a = pick(rng);
    int b = a;
    if (!loop(rng) || n == 1) {
      while (b == a && n > 1) b = pick(rng);
    }
    ends.emplace_back(a, b);
    is_directed.push_back(directed(rng));
  }
  int undirected = static_cast<int>(std::count(is_directed.begin(), is_directed.end(), false));
  std::uniform_int_distribution<int> edge_pick(0, m - 1);
  while (undirected < std::min(shape.min_undirected, m)) {
    const auto k = static_cast<std::size_t>(edge_pick(rng));
    if (is_directed[k]) {
      is_directed[k] = false;
      ++undirected;
    }
  }
  for (int i = 0; i < m; ++i) {
    g.add_edge("x" + std::to_string(i), ends[static_cast<std::size_t>(i)].first,
               ends[static_cast<std::size_t>(i)].second, is_directed[static_cast<std::size_t>(i)]);
  }
  return g;
}

PairInstance random_pair_instance(std::mt19937_64& rng, const GraphShape& shape) {
  PairInstance out{random_mixed_graph(rng, shape), {}};
  const int n = out.graph.vertex_count();
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int j = 0; j < 2; ++j) {
    const int s = pick(rng);
    int t = s;
    while (t == s) t = pick(rng);
    out.pairs.emplace_back(s, t);
  }
  return out;
}

MixedGraph augment(const PairInstance& instance, ElementSet* p_edges) {
  MixedGraph g = instance.graph;
  ElementSet p;
  for (std::size_t j = 0; j < instance.pairs.size(); ++j) {
    const auto [s, t] = instance.pairs[j];
    p.insert(g.add_edge("p" + std::to_string(j + 1), t, s, true));
  }
  if (p_edges != nullptr) *p_edges = p;
  return g;
}

}  // namespace mixmat::testing
