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

#include "mixmat/graph_orientation.h"

#include <algorithm>
#include <string>

#include "mixmat/digraph.h"
#include "mixmat/errors.h"

namespace mixmat {
namespace {

using digraph::Arc;

std::vector<Arc> all_edges_as_arcs(const MixedGraph& g, int skip = -1) {
  std::vector<Arc> arcs;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i != skip) arcs.push_back({g.edge(i).tail, g.edge(i).head});
  }
  return arcs;
}

Signature fix_edge(int e, bool flip) {
  return {ElementSet::single(e), flip ? ElementSet::single(e) : ElementSet{}};
}

// Some U whose boundary is all directed out of U, found on the digraph that
// remains after contracting every undirected edge: U is the preimage of a
// strong component with no entering arc.
std::optional<CutCertificate> find_out_cut(const MixedGraph& g) {
  std::vector<Arc> undirected;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!g.edge(i).directed) undirected.push_back({g.edge(i).tail, g.edge(i).head});
  }
  const std::vector<int> blob = digraph::component_ids(g.vertex_count(), undirected);

  std::vector<int> blob_ids(blob.begin(), blob.end());
  std::sort(blob_ids.begin(), blob_ids.end());
  blob_ids.erase(std::unique(blob_ids.begin(), blob_ids.end()), blob_ids.end());
  auto blob_index = [&](int v) {
    return static_cast<int>(std::lower_bound(blob_ids.begin(), blob_ids.end(), blob[static_cast<std::size_t>(v)]) -
                            blob_ids.begin());
  };
  const int k = static_cast<int>(blob_ids.size());
  std::vector<Arc> contracted;
  for (const auto& e : g.edges()) {
    if (!e.directed) continue;
    const int a = blob_index(e.tail);
    const int b = blob_index(e.head);
    if (a != b) contracted.push_back({a, b});
  }
  if (digraph::is_strongly_connected(k, contracted)) return std::nullopt;

  for (int x = 0; x < k; ++x) {
    // x's strong component has no entering arc iff everything reaching x is
    // reached from x.
    bool source = true;
    for (int y = 0; y < k && source; ++y) {
      if (y != x && digraph::reachable(k, contracted, y, x) && !digraph::reachable(k, contracted, x, y)) {
        source = false;
      }
    }
    if (!source) continue;
    CutCertificate cut;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int b = blob_index(v);
      if (b == x || (digraph::reachable(k, contracted, x, b) && digraph::reachable(k, contracted, b, x))) {
        cut.vertices.push_back(v);
      }
    }
    return cut;
  }
  return std::nullopt;
}

}  // namespace

bool verify_bridge(const MixedGraph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count()) return false;
  const auto& e = g.edge(edge);
  if (e.tail == e.head) return false;
  const std::vector<int> comp = digraph::component_ids(g.vertex_count(), all_edges_as_arcs(g, edge));
  return comp[static_cast<std::size_t>(e.tail)] != comp[static_cast<std::size_t>(e.head)];
}

bool verify_cut(const MixedGraph& g, const std::vector<int>& vertices) {
  std::vector<bool> in_u(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) return false;
    in_u[static_cast<std::size_t>(v)] = true;
  }
  const auto size = std::count(in_u.begin(), in_u.end(), true);
  if (size == 0 || size == g.vertex_count()) return false;
  for (const auto& e : g.edges()) {
    const bool tail_in = in_u[static_cast<std::size_t>(e.tail)];
    const bool head_in = in_u[static_cast<std::size_t>(e.head)];
    if (tail_in == head_in) continue;
    if (!e.directed || !tail_in) return false;
  }
  return true;
}

bool verify_cycle(const MixedGraph& g, const std::vector<int>& edges) {
  if (edges.empty()) return false;
  std::vector<int> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 0 || sorted.back() >= g.edge_count()) return false;

  const int start = g.edge(edges.front()).tail;
  int at = start;
  for (int i : edges) {
    const auto& e = g.edge(i);
    if (e.tail != at) return false;
    if (!e.directed && e.tail != e.head) return false;
    at = e.head;
  }
  return at == start;
}

StrongOrientationResult strong_orientation(const MixedGraph& g) {
  StrongOrientationResult result;
  const int n = g.vertex_count();

  const std::vector<int> comp = digraph::component_ids(n, all_edges_as_arcs(g));
  if (std::any_of(comp.begin(), comp.end(), [&](int c) { return c != comp.front(); })) {
    CutCertificate cut;
    for (int v = 0; v < n; ++v) {
      if (comp[static_cast<std::size_t>(v)] == comp.front()) cut.vertices.push_back(v);
    }
    result.certificate = cut;
    return result;
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (verify_bridge(g, i)) {
      result.certificate = BridgeCertificate{i};
      return result;
    }
  }

  MixedMatroid current = mixed_graphic_matroid(g);
  if (!is_totally_cyclic(current)) {
    std::optional<CutCertificate> cut = find_out_cut(g);
    if (!cut || !verify_cut(g, cut->vertices)) {
      throw InternalError("no strongly connected orientation, but no out-cut was found");
    }
    result.certificate = *cut;
    return result;
  }

  for (int e : g.undirected_edges()) {
    bool fixed = false;
    for (bool flip : {false, true}) {
      MixedMatroid next = apply_signature(current, fix_edge(e, flip));
      if (is_totally_cyclic(next)) {
        current = std::move(next);
        result.orientation.domain.insert(e);
        if (flip) result.orientation.flipped.insert(e);
        fixed = true;
        break;
      }
    }
    if (!fixed) throw InternalError("neither direction of edge '" + g.edge(e).id + "' keeps total cyclicity");
  }

  const std::vector<Arc> arcs = digraph::oriented_arcs(g, result.orientation);
  if (!digraph::is_strongly_connected(n, arcs)) {
    throw InternalError("constructed orientation is not strongly connected");
  }
  result.feasible = true;
  return result;
}

AcyclicOrientationResult acyclic_orientation(const MixedGraph& g) {
  AcyclicOrientationResult result;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (g.edge(i).tail == g.edge(i).head) {
      result.certificate = CycleCertificate{{i}};
      return result;
    }
  }

  std::vector<int> edge_of_arc;
  const std::vector<Arc> fixed_arcs = digraph::directed_arcs(g, &edge_of_arc);
  const std::optional<std::vector<int>> cycle = digraph::find_directed_cycle(g.vertex_count(), fixed_arcs);

  MixedMatroid current = mixed_graphic_matroid(g);
  if (exists_acyclic_coherent(current) == cycle.has_value()) {
    throw InternalError("matroid and digraph disagree on acyclic orientability");
  }
  if (cycle) {
    CycleCertificate cert;
    for (int arc : *cycle) cert.edges.push_back(edge_of_arc[static_cast<std::size_t>(arc)]);
    result.certificate = std::move(cert);
    return result;
  }

  for (int e : g.undirected_edges()) {
    bool fixed = false;
    for (bool flip : {false, true}) {
      MixedMatroid next = apply_signature(current, fix_edge(e, flip));
      if (exists_acyclic_coherent(next)) {
        current = std::move(next);
        result.orientation.domain.insert(e);
        if (flip) result.orientation.flipped.insert(e);
        fixed = true;
        break;
      }
    }
    if (!fixed) throw InternalError("neither direction of edge '" + g.edge(e).id + "' keeps acyclicity");
  }

  if (digraph::find_directed_cycle(g.vertex_count(), digraph::oriented_arcs(g, result.orientation))) {
    throw InternalError("constructed orientation has a directed cycle");
  }
  result.feasible = true;
  return result;
}

PairsOrientationResult p_orientation_pairs(const MixedGraph& g, const VertexPairQuery& query,
                                           const PairsOptions& options) {
  if (query.pairs.empty()) throw InputError("at least one vertex pair is required");
  PairsOrientationResult out;
  out.augmented = g;
  for (std::size_t j = 0; j < query.pairs.size(); ++j) {
    const auto [s, t] = query.pairs[j];
    if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count()) {
      throw InputError("vertex pair refers to an unknown vertex");
    }
    if (s == t) throw InputError("vertex pair (" + g.vertex(s) + ", " + g.vertex(t) + ") has s = t");
    std::string id = "p" + std::to_string(j + 1);
    while (out.augmented.has_edge(id)) id += "'";
    out.p.elements.insert(out.augmented.add_edge(id, t, s, true));
  }

  const MixedMatroid mm = mixed_graphic_matroid(out.augmented);
  out.result = options.brute_force ? brute_force_p_orientation(mm, out.p, options.solver)
                                   : find_p_orientation(mm, out.p, options.solver);
  if (out.result.status != OrientationStatus::kFeasible) return out;

  // Extra edges are appended and directed, so the signature's indices are
  // already those of g.
  out.orientation = out.result.signature;
  const std::vector<Arc> arcs = digraph::oriented_arcs(g, out.orientation);
  for (const auto& [s, t] : query.pairs) {
    if (!digraph::reachable(g.vertex_count(), arcs, s, t)) {
      throw InternalError("orientation misses the path " + g.vertex(s) + " -> " + g.vertex(t));
    }
  }
  return out;
}

}  // namespace mixmat
