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

#ifndef TWINBENCH_WINDOW_H_
#define TWINBENCH_WINDOW_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twinbench/graph.h"
#include "twinbench/vertex.h"

namespace twinbench {

// Induced subgraph on the first `size` enumerated vertices. Edges are index
// pairs (i < j) in ascending lexicographic order.
struct Window {
  std::string family;
  std::size_t size = 0;
  std::vector<VertexId> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  friend bool operator==(const Window&, const Window&) = default;
};

// Throws std::invalid_argument for n == 0.
Window window(const Graph& graph, std::size_t n);

enum class Connectivity { kConnected, kDisconnected, kVacuous };
std::string to_string(Connectivity c);

// Breadth-first reachability on window(graph, n); kVacuous for n <= 1.
Connectivity connected_window(const Graph& graph, std::size_t n);
Connectivity connectivity_of(const Window& w);

}  // namespace twinbench

#endif  // TWINBENCH_WINDOW_H_
