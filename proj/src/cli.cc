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

#include "mixmat/cli.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mixmat/errors.h"
#include "mixmat/json_io.h"

namespace mixmat::cli {
namespace {

struct Command {
  std::string verb;
  std::string path;
  std::vector<std::string> p;
  std::vector<std::string> delete_labels;
  std::vector<std::string> contract_labels;
  std::string element;
  std::vector<std::string> pairs;
  bool brute_force = false;
  bool relax = false;
  bool text = false;
};

struct Outcome {
  Json report;
  int code = kExitTrue;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

MixedMatroid as_matroid(const Instance& instance) {
  if (const auto* g = std::get_if<GraphInstance>(&instance)) return mixed_graphic_matroid(g->graph);
  return std::get<MixedMatroid>(instance);
}

const GraphInstance& as_graph(const Instance& instance, const std::string& verb) {
  const auto* g = std::get_if<GraphInstance>(&instance);
  if (g == nullptr) throw InputError(verb + " needs a graph instance");
  return *g;
}

PSet p_set(const MixedMatroid& mm, const Command& cmd) {
  if (cmd.p.empty()) throw InputError(cmd.verb + " needs --p");
  return PSet{mm.ground().subset_of_labels(cmd.p)};
}

int truth(bool b) { return b ? kExitTrue : kExitFalse; }

Json circuit_list(const MixedMatroid& mm) {
  Json list = Json::array();
  for (const MixedCircuit& c : mixed_circuits(mm)) list.push_back(mixed_circuit_json(c, mm.ground()));
  return list;
}

Outcome check_axioms(const Command& cmd) {
  const Json j = read_json_file(cmd.path);
  GroundSet ground;
  std::vector<SignedSet> circuits;
  if (j.is_object() && j.contains("vertices")) {
    const GraphInstance g = graph_from_json(j);
    const OrientedMatroid om = graphic_oriented_matroid(g.graph);
    ground = om.ground();
    circuits = om.signed_circuits();
  } else {
    ground = ground_from_json(j);
    circuits = raw_circuits_from_json(j, ground);
  }
  const AxiomReport report = verify_circuit_axioms(circuits, ground);
  Outcome o;
  o.report["valid"] = report.empty();
  Json violations = Json::array();
  for (const AxiomViolation& v : report) {
    Json item = Json::object();
    item["kind"] = to_string(v.kind);
    item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  o.report["violations"] = std::move(violations);
  o.code = truth(report.empty());
  return o;
}

Outcome dispatch(const Command& cmd) {
  if (cmd.verb == "check-axioms") return check_axioms(cmd);

  const Instance instance = parse_instance(cmd.path);
  const SolverOptions solver{cmd.relax};
  Outcome o;

  if (cmd.verb == "circuits") {
    const MixedMatroid mm = as_matroid(instance);
    o.report["unsigned"] = mm.ground().labels_of(mm.unsigned_elements());
    o.report["circuits"] = circuit_list(mm);
  } else if (cmd.verb == "cocircuits") {
    const MixedMatroid mm = as_matroid(instance);
    o.report["unsigned"] = mm.ground().labels_of(mm.unsigned_elements());
    o.report["cocircuits"] = circuit_list(dual(mm));
  } else if (cmd.verb == "dual") {
    o.report = to_json(dual(as_matroid(instance)));
  } else if (cmd.verb == "minor") {
    const MixedMatroid mm = as_matroid(instance);
    const ElementSet del = mm.ground().subset_of_labels(cmd.delete_labels);
    const ElementSet con = mm.ground().subset_of_labels(cmd.contract_labels);
    if (del.intersects(con)) throw InputError("--delete and --contract must be disjoint");
    const MixedMatroid deleted = deletion(mm, del);
    o.report = to_json(contraction(deleted, compress(con, del)));
  } else if (cmd.verb == "p-connected") {
    const MixedMatroid mm = as_matroid(instance);
    const PSet p = p_set(mm, cmd);
    const PConnectivityReport r = p_connectivity_report(mm, p, solver);
    o.report = connectivity_json(r, p, mm.ground());
    o.code = truth(r.connected());
  } else if (cmd.verb == "essential") {
    const MixedMatroid mm = as_matroid(instance);
    const PSet p = p_set(mm, cmd);
    if (!cmd.element.empty()) {
      const int e = mm.ground().index_of(cmd.element);
      const bool essential = is_p_essential(mm, e, p, solver);
      o.report["element"] = cmd.element;
      o.report["essential"] = essential;
      o.code = truth(essential);
    } else {
      const ElementSet essential = p_essential_elements(mm, p, solver);
      o.report["essential"] = mm.ground().labels_of(essential);
      o.code = truth(!essential.empty());
    }
  } else if (cmd.verb == "orient") {
    const MixedMatroid mm = as_matroid(instance);
    const PSet p = p_set(mm, cmd);
    const OrientationResult r = cmd.brute_force ? brute_force_p_orientation(mm, p, solver)
                                                : find_p_orientation(mm, p, solver);
    o.report = orientation_result_json(r, mm.ground());
    o.code = truth(r.status == OrientationStatus::kFeasible);
  } else if (cmd.verb == "strong-orient") {
    const MixedGraph& g = as_graph(instance, cmd.verb).graph;
    const StrongOrientationResult r = strong_orientation(g);
    o.report = strong_orientation_json(r, g);
    o.code = truth(r.feasible);
  } else if (cmd.verb == "acyclic-orient") {
    const MixedGraph& g = as_graph(instance, cmd.verb).graph;
    const AcyclicOrientationResult r = acyclic_orientation(g);
    o.report = acyclic_orientation_json(r, g);
    o.code = truth(r.feasible);
  } else if (cmd.verb == "pairs-orient") {
    const GraphInstance& gi = as_graph(instance, cmd.verb);
    VertexPairQuery query = gi.query;
    if (!cmd.pairs.empty()) {
      query.pairs.clear();
      for (const std::string& pr : cmd.pairs) {
        const auto comma = pr.find(',');
        if (comma == std::string::npos) throw InputError("--pair expects s,t");
        query.pairs.emplace_back(gi.graph.vertex_index(pr.substr(0, comma)),
                                 gi.graph.vertex_index(pr.substr(comma + 1)));
      }
    }
    const PairsOrientationResult r = p_orientation_pairs(gi.graph, query, {solver, cmd.brute_force});
    o.report = pairs_orientation_json(r, gi.graph);
    o.code = truth(r.result.status == OrientationStatus::kFeasible);
  } else {
    throw InputError("unknown command " + cmd.verb);
  }
  return o;
}

std::string plain_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const Json& item : v) {
      if (!out.empty()) out += ", ";
      out += plain_value(item);
    }
    return "[" + out + "]";
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, value] : v.items()) {
      if (!out.empty()) out += ", ";
      out += key + "=" + plain_value(value);
    }
    return "{" + out + "}";
  }
  return v.dump();
}

void print_text(const Json& report, std::ostream& out) {
  for (const auto& [key, value] : report.items()) out << key << ": " << plain_value(value) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed matroid orientation toolkit", "mixmat"};
  app.require_subcommand(1);
  Command cmd;

  struct Verb {
    const char* name;
    const char* help;
    bool p;
    bool minor;
    bool element;
    bool pairs;
    bool brute_force;
  };
  const Verb verbs[] = {
      {"check-axioms", "verify the signed circuit axioms", false, false, false, false, false},
      {"circuits", "list mixed circuits", false, false, false, false, false},
      {"cocircuits", "list mixed circuits of the dual", false, false, false, false, false},
      {"dual", "print the dual matroid", false, false, false, false, false},
      {"minor", "delete and/or contract elements", false, true, false, false, false},
      {"p-connected", "test P-connectivity", true, false, false, false, false},
      {"essential", "list P-essential elements", true, false, true, false, false},
      {"orient", "find a P-orientation", true, false, false, false, true},
      {"strong-orient", "orient a mixed graph strongly connected", false, false, false, false, false},
      {"acyclic-orient", "orient a mixed graph acyclic", false, false, false, false, false},
      {"pairs-orient", "orient a mixed graph to connect vertex pairs", false, false, false, true, true},
  };
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("input", cmd.path, "instance file (graph or matroid JSON)")->required();
    if (v.p) sub->add_option("--p", cmd.p, "labels of P, comma separated")->delimiter(',');
    if (v.minor) {
      sub->add_option("--delete", cmd.delete_labels, "labels to delete")->delimiter(',');
      sub->add_option("--contract", cmd.contract_labels, "labels to contract")->delimiter(',');
    }
    if (v.element) sub->add_option("--element", cmd.element, "test a single element");
    if (v.pairs) sub->add_option("--pair", cmd.pairs, "vertex pair s,t (repeatable)");
    if (v.brute_force) sub->add_flag("--brute-force", cmd.brute_force, "use exhaustive search");
    if (v.p || v.pairs) {
      sub->add_flag("--relax-total-cyclicity", cmd.relax,
                    "do not require total cyclicity for P-connectivity");
    }
    sub->add_flag("--text", cmd.text, "plain-text summary instead of JSON");
    sub->callback([&cmd, name = std::string(v.name)] { cmd.verb = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    const Outcome o = dispatch(cmd);
    if (cmd.text) {
      print_text(o.report, out);
    } else {
      out << emit_report(o.report) << '\n';
    }
    return o.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace mixmat::cli
