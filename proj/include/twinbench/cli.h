// Copyright 2026 The Twinbench Authors.
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

#ifndef TWINBENCH_CLI_H_
#define TWINBENCH_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "twinbench/families.h"
#include "twinbench/morphism_expr.h"
#include "twinbench/subgraph.h"

namespace twinbench {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Default window for verification commands; overridden by this variable.
inline constexpr const char* kWindowEnvVar = "TWINBENCH_WINDOW";

// Named maps of a bundle plus beta(i,j) over its alternating family.
Environment environment_for(const FamilyBundle& bundle);

// SPEC := name | union(SPEC, ...) | image(EXPR, SPEC), names drawn from the
// bundle's registered specs. Throws std::invalid_argument.
SubgraphSpec parse_spec_arg(std::string_view text, const FamilyBundle& bundle,
                            const Evaluator& eval);

// Runs one invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace twinbench

#endif  // TWINBENCH_CLI_H_
