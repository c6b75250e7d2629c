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

#ifndef MIXMAT_JSON_IO_H_
#define MIXMAT_JSON_IO_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "mixmat/graph_orientation.h"
#include "mixmat/mixed_graph.h"
#include "mixmat/mixed_matroid.h"
#include "mixmat/oriented_matroid.h"
#include "mixmat/solver.h"

namespace mixmat {

// Key order is insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

struct GraphInstance {
  MixedGraph graph;
  VertexPairQuery query;

  friend bool operator==(const GraphInstance& a, const GraphInstance& b) {
    return a.graph == b.graph && a.query.pairs == b.query.pairs;
  }
};

using Instance = std::variant<GraphInstance, MixedMatroid>;

// Matroid files:
//   {"labels": [...], "circuits": [{"+": [...], "-": [...]}, ...],
//    "unsigned": [...]}            ("unsigned" optional)
// One circuit per +/- pair is enough; the loader closes under negation and
// checks the axioms.
// Graph files:
//   {"vertices": [...], "edges": [{"id", "tail", "head", "directed"}, ...],
//    "pairs": [["s", "t"], ...]}   ("pairs" optional)
// Every loader throws InputError (or CapacityError) on bad input.
MixedMatroid matroid_from_json(const Json& j);
// Same parse but without the axiom check; circuits are closed under negation.
std::vector<SignedSet> raw_circuits_from_json(const Json& j, const GroundSet& ground);
GroundSet ground_from_json(const Json& j);
GraphInstance graph_from_json(const Json& j);
Instance instance_from_json(const Json& j);
Json parse_json_text(std::string_view text);
Instance parse_instance(const std::string& path);

Json to_json(const OrientedMatroid& om);
Json to_json(const MixedMatroid& mm);
Json to_json(const GraphInstance& instance);
Json to_json(const Instance& instance);

Json signed_set_json(const SignedSet& s, const GroundSet& ground);
Json mixed_circuit_json(const MixedCircuit& c, const GroundSet& ground);
Json signature_json(const Signature& s, const GroundSet& ground);
Json orientation_result_json(const OrientationResult& r, const GroundSet& ground);
Json connectivity_json(const PConnectivityReport& r, const PSet& p, const GroundSet& ground);
Json strong_orientation_json(const StrongOrientationResult& r, const MixedGraph& g);
Json acyclic_orientation_json(const AcyclicOrientationResult& r, const MixedGraph& g);
Json pairs_orientation_json(const PairsOrientationResult& r, const MixedGraph& g);

// Deterministic rendering used for every report.
std::string emit_report(const Json& report);

}  // namespace mixmat

#endif  // MIXMAT_JSON_IO_H_
