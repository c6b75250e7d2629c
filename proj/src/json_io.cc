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

#include "mixmat/json_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "mixmat/errors.h"

namespace mixmat {
namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

std::string string_value(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& item : j) out.push_back(string_value(item, what));
  return out;
}

Json label_list(ElementSet s, const GroundSet& ground) {
  Json out = Json::array();
  for (int i : s) out.push_back(ground.label(i));
  return out;
}

const char* method_name(DecisionMethod m) {
  return m == DecisionMethod::kShortcut ? "shortcut" : "brute-force";
}

}  // namespace

GroundSet ground_from_json(const Json& j) {
  return GroundSet(string_list(member(j, "labels"), "\"labels\""));
}

std::vector<SignedSet> raw_circuits_from_json(const Json& j, const GroundSet& ground) {
  const Json& list = member(j, "circuits");
  if (!list.is_array()) throw InputError("\"circuits\" must be an array");
  std::vector<SignedSet> out;
  for (const Json& c : list) {
    if (!c.is_object()) throw InputError("each circuit must be an object");
    for (const auto& [key, value] : c.items()) {
      if (key != "+" && key != "-") throw InputError("unexpected circuit key \"" + key + "\"");
    }
    SignedSet s;
    if (c.contains("+")) s.plus = ground.subset_of_labels(string_list(c.at("+"), "circuit \"+\""));
    if (c.contains("-")) s.minus = ground.subset_of_labels(string_list(c.at("-"), "circuit \"-\""));
    if (s.plus.intersects(s.minus)) {
      throw InputError("circuit " + to_string(SignedSet{s.plus & s.minus, {}}, ground) +
                       " lists an element with both signs");
    }
    out.push_back(s);
    out.push_back(s.negated());
  }
  return out;
}

MixedMatroid matroid_from_json(const Json& j) {
  GroundSet ground = ground_from_json(j);
  std::vector<SignedSet> circuits = raw_circuits_from_json(j, ground);
  ElementSet unsigned_elements;
  if (j.contains("unsigned")) {
    unsigned_elements = ground.subset_of_labels(string_list(j.at("unsigned"), "\"unsigned\""));
  }
  return make_mixed(make_oriented_matroid(std::move(ground), std::move(circuits)), unsigned_elements);
}

GraphInstance graph_from_json(const Json& j) {
  GraphInstance out;
  out.graph = MixedGraph(string_list(member(j, "vertices"), "\"vertices\""));
  const Json& edges = member(j, "edges");
  if (!edges.is_array()) throw InputError("\"edges\" must be an array");
  for (const Json& e : edges) {
    const Json& directed = member(e, "directed");
    if (!directed.is_boolean()) throw InputError("\"directed\" must be true or false");
    out.graph.add_edge(string_value(member(e, "id"), "edge id"), string_value(member(e, "tail"), "tail"),
                       string_value(member(e, "head"), "head"), directed.get<bool>());
  }
  if (j.contains("pairs")) {
    const Json& pairs = j.at("pairs");
    if (!pairs.is_array()) throw InputError("\"pairs\" must be an array");
    for (const Json& pr : pairs) {
      const std::vector<std::string> ends = string_list(pr, "pair");
      if (ends.size() != 2) throw InputError("each pair must have exactly two vertices");
      out.query.pairs.emplace_back(out.graph.vertex_index(ends[0]), out.graph.vertex_index(ends[1]));
    }
  }
  if (out.graph.edge_count() > kMaxElements) {
    throw CapacityError("graph has more than " + std::to_string(kMaxElements) + " edges");
  }
  return out;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  if (j.contains("vertices")) return graph_from_json(j);
  if (j.contains("circuits")) return matroid_from_json(j);
  throw InputError("instance has neither \"vertices\" nor \"circuits\"");
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Instance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(parse_json_text(buffer.str()));
}

Json signed_set_json(const SignedSet& s, const GroundSet& ground) {
  Json out = Json::object();
  out["+"] = label_list(s.plus, ground);
  out["-"] = label_list(s.minus, ground);
  return out;
}

Json mixed_circuit_json(const MixedCircuit& c, const GroundSet& ground) {
  Json out = signed_set_json(c.signed_part, ground);
  out["unsigned"] = label_list(c.unsigned_part, ground);
  return out;
}

Json to_json(const OrientedMatroid& om) {
  Json out = Json::object();
  out["labels"] = om.ground().labels();
  Json circuits = Json::array();
  for (const SignedSet& c : om.circuits()) circuits.push_back(signed_set_json(c, om.ground()));
  out["circuits"] = std::move(circuits);
  return out;
}

Json to_json(const MixedMatroid& mm) {
  Json out = to_json(mm.oriented());
  out["unsigned"] = label_list(mm.unsigned_elements(), mm.ground());
  return out;
}

Json to_json(const GraphInstance& instance) {
  const MixedGraph& g = instance.graph;
  Json out = Json::object();
  out["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json edge = Json::object();
    edge["id"] = e.id;
    edge["tail"] = g.vertex(e.tail);
    edge["head"] = g.vertex(e.head);
    edge["directed"] = e.directed;
    edges.push_back(std::move(edge));
  }
  out["edges"] = std::move(edges);
  if (!instance.query.pairs.empty()) {
    Json pairs = Json::array();
    for (const auto& [s, t] : instance.query.pairs) pairs.push_back({g.vertex(s), g.vertex(t)});
    out["pairs"] = std::move(pairs);
  }
  return out;
}

Json to_json(const Instance& instance) {
  return std::visit([](const auto& value) { return to_json(value); }, instance);
}

Json signature_json(const Signature& s, const GroundSet& ground) {
  Json out = Json::object();
  for (int i : s.domain) out[ground.label(i)] = s.sign(i);
  return out;
}

Json connectivity_json(const PConnectivityReport& r, const PSet& p, const GroundSet& ground) {
  Json out = Json::object();
  out["p_connected"] = r.connected();
  out["every_p_witnessed"] = r.every_p_witnessed;
  out["unwitnessed"] = label_list(p.elements - r.witnessed, ground);
  if (r.total_cyclicity_required) {
    out["totally_cyclic"] = r.totally_cyclic;
    out["cyclicity_method"] = method_name(r.cyclicity_method);
  } else {
    out["totally_cyclic"] = "not required";
  }
  if (!r.connected()) out["fails"] = !r.every_p_witnessed ? "solo-circuits" : "total-cyclicity";
  return out;
}

Json orientation_result_json(const OrientationResult& r, const GroundSet& ground) {
  Json out = Json::object();
  out["status"] = to_string(r.status);
  if (r.status == OrientationStatus::kFeasible) out["signature"] = signature_json(r.signature, ground);
  if (r.witness) out["witness"] = ground.label(*r.witness);
  out["method"] = to_string(r.method);
  if (r.status == OrientationStatus::kNotPConnected) {
    out["fails"] = !r.connectivity.every_p_witnessed ? "solo-circuits" : "total-cyclicity";
  }
  return out;
}

namespace {

Json edge_list(const std::vector<int>& edges, const MixedGraph& g) {
  Json out = Json::array();
  for (int i : edges) out.push_back(g.edge(i).id);
  return out;
}

Json orientation_json(const GraphOrientation& o, const MixedGraph& g) {
  Json out = Json::object();
  for (int i : o.domain) out[g.edge(i).id] = o.sign(i);
  return out;
}

}  // namespace

Json strong_orientation_json(const StrongOrientationResult& r, const MixedGraph& g) {
  Json out = Json::object();
  out["status"] = r.feasible ? "Feasible" : "Infeasible";
  if (r.feasible) out["orientation"] = orientation_json(r.orientation, g);
  if (const auto* bridge = std::get_if<BridgeCertificate>(&r.certificate)) {
    Json cert = Json::object();
    cert["type"] = "bridge";
    cert["edge"] = g.edge(bridge->edge).id;
    out["certificate"] = std::move(cert);
  } else if (const auto* cut = std::get_if<CutCertificate>(&r.certificate)) {
    Json cert = Json::object();
    cert["type"] = "cut";
    Json u = Json::array();
    for (int v : cut->vertices) u.push_back(g.vertex(v));
    cert["U"] = std::move(u);
    out["certificate"] = std::move(cert);
  }
  return out;
}

Json acyclic_orientation_json(const AcyclicOrientationResult& r, const MixedGraph& g) {
  Json out = Json::object();
  out["status"] = r.feasible ? "Feasible" : "Infeasible";
  if (r.feasible) out["orientation"] = orientation_json(r.orientation, g);
  if (r.certificate) {
    Json cert = Json::object();
    cert["type"] = "cycle";
    cert["edges"] = edge_list(r.certificate->edges, g);
    out["certificate"] = std::move(cert);
  }
  return out;
}

Json pairs_orientation_json(const PairsOrientationResult& r, const MixedGraph& g) {
  const GroundSet ground(r.augmented.edge_ids());
  Json out = orientation_result_json(r.result, ground);
  if (r.result.status == OrientationStatus::kFeasible) {
    out["orientation"] = orientation_json(r.orientation, g);
  }
  Json demand_edges = Json::array();
  for (int i : r.p.elements) {
    const auto& e = r.augmented.edge(i);
    Json d = Json::object();
    d["edge"] = e.id;
    d["s"] = r.augmented.vertex(e.head);
    d["t"] = r.augmented.vertex(e.tail);
    demand_edges.push_back(std::move(d));
  }
  out["demand_edges"] = std::move(demand_edges);
  return out;
}

std::string emit_report(const Json& report) { return report.dump(2); }

}  // namespace mixmat
