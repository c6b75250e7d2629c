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

#ifndef MIXMAT_CLI_H_
#define MIXMAT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mixmat::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

// Runs one command. `args` excludes the program name, e.g.
// {"orient", "g1.json", "--p", "p1,p2"}. The JSON report goes to `out`,
// diagnostics to `err`. Returns 0 for true/feasible, 1 for false/infeasible,
// 2 for usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixmat::cli

#endif  // MIXMAT_CLI_H_
