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

#ifndef TWINBENCH_SERIALIZE_H_
#define TWINBENCH_SERIALIZE_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "twinbench/selfcontain.h"
#include "twinbench/twins.h"
#include "twinbench/verify.h"
#include "twinbench/window.h"

namespace twinbench {

using Json = nlohmann::ordered_json;

// {"family", "window", "vertices": [{"tag", "coords"}], "edges": [[i, j]]}.
Json window_to_json(const Window& w);
// Inverse of window_to_json; throws std::invalid_argument on malformed
// input (missing fields, out-of-range or unordered edges).
Window window_from_json(const Json& j);
Window window_from_json_text(std::string_view text);

// Undirected DOT graph with quoted "tag(c,...)" node ids, one statement per
// edge in index order.
std::string window_to_dot(const Window& w);

Json to_json(const VertexId& v);
Json to_json(const VerificationReport& r);
Json to_json(const DeficiencyCount& d);
Json to_json(const NonIsoCertificate& c);

}  // namespace twinbench

#endif  // TWINBENCH_SERIALIZE_H_
