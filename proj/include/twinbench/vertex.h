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

#ifndef TWINBENCH_VERTEX_H_
#define TWINBENCH_VERTEX_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace twinbench {

// Vertex coordinates are 1-based positive integers; 0 never names a vertex.
using Coord = std::uint64_t;
inline constexpr Coord kUnbounded = std::numeric_limits<Coord>::max();

// A vertex of an infinite graph named by a tag and a coordinate tuple, e.g.
// o(), a(1,8), k(2,5). Ordered lexicographically by (tag, coords).
struct VertexId {
  std::string tag;
  std::vector<Coord> coords;

  VertexId() = default;
  VertexId(std::string t, std::vector<Coord> c)
      : tag(std::move(t)), coords(std::move(c)) {}
  VertexId(std::string t, std::initializer_list<Coord> c)
      : tag(std::move(t)), coords(c) {}

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

// "tag(c1,c2,...)"; a nullary vertex prints as "tag()".
std::string to_string(const VertexId& v);

// Inverse of to_string. Throws std::invalid_argument on malformed text.
VertexId parse_vertex(std::string_view text);

struct VertexIdHash {
  std::size_t operator()(const VertexId& v) const noexcept;
};

}  // namespace twinbench

#endif  // TWINBENCH_VERTEX_H_
