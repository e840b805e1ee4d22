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

#include "twinbench/window.h"

#include <stdexcept>

namespace twinbench {

Window window(const Graph& graph, std::size_t n) {
  if (n == 0) throw std::invalid_argument("window size must be positive");
  Window w;
  w.family = graph.family_id();
  w.size = n;
  w.vertices = graph.first(n);
  const std::size_t m = w.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (graph.adjacent_members(w.vertices[i], w.vertices[j])) {
        w.edges.emplace_back(i, j);
      }
    }
  }
  return w;
}

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::kConnected:
      return "connected";
    case Connectivity::kDisconnected:
      return "disconnected";
    case Connectivity::kVacuous:
      return "vacuous";
  }
  return "?";
}

Connectivity connectivity_of(const Window& w) {
  const std::size_t m = w.vertices.size();
  if (m <= 1) return Connectivity::kVacuous;
  std::vector<std::vector<std::size_t>> adj(m);
  for (const auto& [i, j] : w.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<bool> seen(m, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t next : adj[queue[head]]) {
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return queue.size() == m ? Connectivity::kConnected
                           : Connectivity::kDisconnected;
}

Connectivity connected_window(const Graph& graph, std::size_t n) {
  if (n <= 1) return Connectivity::kVacuous;
  return connectivity_of(window(graph, n));
}

}  // namespace twinbench
