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

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "mixmat/json_io.h"

namespace mixmat {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json report() const { return parse_json_text(out); }
};

Outcome run(std::vector<std::string> args) {
  for (std::string& a : args) {
    if (a.ends_with(".json")) a = std::string(MIXMAT_TEST_DATA_DIR) + "/" + a;
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, OrientTwoDemandGraph) {
  const Outcome o = run({"orient", "g1.json", "--p", "p1,p2"});
  EXPECT_EQ(o.code, cli::kExitFalse);
  const Json j = o.report();
  EXPECT_EQ(j["status"], "Infeasible");
  EXPECT_EQ(j["witness"], "e");
  EXPECT_EQ(j["method"], "theorem");
}

TEST(Cli, OrientParallelVariant) {
  const Outcome theorem = run({"orient", "g2.json", "--p", "p1,p2"});
  EXPECT_EQ(theorem.code, cli::kExitTrue);
  EXPECT_EQ(theorem.report()["signature"], parse_json_text(R"({"e": -1, "e'": 1})"));

  const Outcome brute = run({"orient", "g2.json", "--p", "p1,p2", "--brute-force"});
  EXPECT_EQ(brute.code, cli::kExitTrue);
  EXPECT_EQ(brute.report()["method"], "brute-force");
  EXPECT_EQ(brute.report()["signature"], parse_json_text(R"({"e": 1, "e'": -1})"));
}

TEST(Cli, StrongOrient) {
  const Outcome d2 = run({"strong-orient", "d2.json"});
  EXPECT_EQ(d2.code, cli::kExitTrue);
  EXPECT_EQ(d2.report()["orientation"], parse_json_text(R"({"e": -1})"));

  const Outcome path = run({"strong-orient", "path.json"});
  EXPECT_EQ(path.code, cli::kExitFalse);
  EXPECT_EQ(path.report()["certificate"], parse_json_text(R"({"type": "bridge", "edge": "e"})"));

  const Outcome cut = run({"strong-orient", "out_cut.json"});
  EXPECT_EQ(cut.code, cli::kExitFalse);
  EXPECT_EQ(cut.report()["certificate"], parse_json_text(R"({"type": "cut", "U": ["x"]})"));
}

TEST(Cli, AcyclicOrient) {
  EXPECT_EQ(run({"acyclic-orient", "g1.json"}).code, cli::kExitFalse);
  EXPECT_EQ(run({"acyclic-orient", "u3.json"}).code, cli::kExitTrue);
  EXPECT_EQ(run({"acyclic-orient", "t3.json"}).report()["certificate"]["type"], "cycle");
}

TEST(Cli, PConnectedAndEssential) {
  EXPECT_EQ(run({"p-connected", "g1.json", "--p", "p1,p2"}).code, cli::kExitTrue);
  const Outcome essential = run({"essential", "g1.json", "--p", "p1,p2"});
  EXPECT_EQ(essential.code, cli::kExitTrue);
  EXPECT_EQ(essential.report()["essential"], parse_json_text(R"(["e"])"));
  EXPECT_EQ(run({"essential", "g2.json", "--p", "p1,p2", "--element", "e"}).code, cli::kExitFalse);
}

TEST(Cli, PairsOrient) {
  const Outcome both = run({"pairs-orient", "g1_pairs.json"});
  EXPECT_EQ(both.code, cli::kExitFalse);
  EXPECT_EQ(both.report()["witness"], "e");

  const Outcome one = run({"pairs-orient", "g1_pairs.json", "--pair", "v4,v1"});
  EXPECT_EQ(one.code, cli::kExitFalse);
  EXPECT_EQ(one.report()["status"], "NotPConnected");

  const Outcome relaxed = run({"pairs-orient", "g1_pairs.json", "--pair", "v4,v1", "--relax-total-cyclicity"});
  EXPECT_EQ(relaxed.code, cli::kExitTrue);
  EXPECT_EQ(relaxed.report()["orientation"], parse_json_text(R"({"e": -1})"));
}

TEST(Cli, MatroidVerbs) {
  EXPECT_EQ(run({"check-axioms", "om_t3.json"}).code, cli::kExitTrue);
  EXPECT_EQ(run({"check-axioms", "nested_supports.json"}).code, cli::kExitFalse);
  EXPECT_EQ(run({"circuits", "g1.json"}).report()["circuits"].size(), 3u);
  EXPECT_EQ(run({"cocircuits", "om_d2.json"}).code, cli::kExitTrue);
  EXPECT_EQ(run({"dual", "om_t3.json"}).code, cli::kExitTrue);
  EXPECT_EQ(run({"minor", "g1.json", "--contract", "e"}).report()["circuits"].size(), 2u);
}

TEST(Cli, InputErrorsExitTwo) {
  const Outcome unknown = run({"dual", "unknown_label.json"});
  EXPECT_EQ(unknown.code, cli::kExitError);
  EXPECT_NE(unknown.err.find("z"), std::string::npos);
  EXPECT_EQ(run({"orient", "g1.json", "--p", "nope"}).code, cli::kExitError);
  EXPECT_EQ(run({"orient", "g1.json", "--p", "e"}).code, cli::kExitError);
  EXPECT_EQ(run({"no-such-verb"}).code, cli::kExitError);
  EXPECT_EQ(run({"dual", "missing.json"}).code, cli::kExitError);
}

TEST(Cli, TextSummary) {
  const Outcome o = run({"orient", "g1.json", "--p", "p1,p2", "--text"});
  EXPECT_EQ(o.code, cli::kExitFalse);
  EXPECT_NE(o.out.find("status: Infeasible"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
  EXPECT_EQ(run({"orient", "g2.json", "--p", "p1,p2"}).out, run({"orient", "g2.json", "--p", "p1,p2"}).out);
}

}  // namespace
}  // namespace mixmat
