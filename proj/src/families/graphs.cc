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

#include <cmath>
#include <memory>
#include <optional>
#include <string>

#include "twinbench/families.h"

namespace twinbench {
namespace {

std::optional<std::string> check_shape(const VertexId& v,
                                       const std::string& tag,
                                       std::size_t arity) {
  if (v.tag != tag) return std::nullopt;
  if (v.coords.size() != arity) {
    return "tag " + tag + " takes " + std::to_string(arity) + " coordinates";
  }
  for (Coord c : v.coords) {
    if (c == 0) return std::string("coordinates are positive integers");
  }
  return std::nullopt;
}

const VertexId kHub{"o", std::vector<Coord>{}};

class ExtendedStarGraph final : public IndexedGraph {
 public:
  std::string family_id() const override { return "extended-star"; }

  std::optional<std::string> malformed(const VertexId& v) const override {
    if (v.tag == "o") return check_shape(v, "o", 0);
    if (v.tag == "a") return check_shape(v, "a", 2);
    return "unknown tag '" + v.tag + "' (expected o or a)";
  }

  bool is_member(const VertexId& v) const override {
    return v.tag == "o" || v.coords[0] <= 2;
  }

  bool adjacent_members(const VertexId& u, const VertexId& v) const override {
    if (u.tag == "o") return v.tag == "a" && v.coords[0] == 1;
    if (v.tag == "o") return u.coords[0] == 1;
    return u.coords[1] == v.coords[1] && u.coords[0] != v.coords[0];
  }

  std::optional<VertexId> vertex_at(std::size_t index) const override {
    if (index == 0) return kHub;
    const std::size_t t = index - 1;
    return VertexId{"a", {t % 2 + 1, t / 2 + 1}};
  }
};

class CliqueChainGraph final : public IndexedGraph {
 public:
  std::string family_id() const override { return "clique-chain"; }

  std::optional<std::string> malformed(const VertexId& v) const override {
    if (v.tag == "o") return check_shape(v, "o", 0);
    if (v.tag == "k") return check_shape(v, "k", 2);
    return "unknown tag '" + v.tag + "' (expected o or k)";
  }

  bool is_member(const VertexId&) const override { return true; }

  bool adjacent_members(const VertexId& u, const VertexId& v) const override {
    if (u.tag == "o") return v.tag == "k" && v.coords[0] == 1;
    if (v.tag == "o") return u.coords[0] == 1;
    const Coord ju = u.coords[0], jv = v.coords[0];
    const Coord mu = u.coords[1], mv = v.coords[1];
    if (ju == jv) return mu != mv;
    return mu == mv && (ju + 1 == jv || jv + 1 == ju);
  }

  // Index t >= 1 lies on diagonal d + 1 = j + m where
  // d(d-1)/2 <= t-1 < d(d+1)/2.
  std::optional<VertexId> vertex_at(std::size_t index) const override {
    if (index == 0) return kHub;
    const std::uint64_t t = index - 1;
    auto d = static_cast<std::uint64_t>(
        (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(t))) / 2.0);
    while (d * (d - 1) / 2 > t) --d;
    while (d * (d + 1) / 2 <= t) ++d;
    const Coord j = t - d * (d - 1) / 2 + 1;
    return VertexId{"k", {j, d + 1 - j}};
  }
};

class RayGraph final : public IndexedGraph {
 public:
  std::string family_id() const override { return "ray"; }

  std::optional<std::string> malformed(const VertexId& v) const override {
    if (v.tag == "r") return check_shape(v, "r", 1);
    return "unknown tag '" + v.tag + "' (expected r)";
  }

  bool is_member(const VertexId&) const override { return true; }

  bool adjacent_members(const VertexId& u, const VertexId& v) const override {
    return u.coords[0] + 1 == v.coords[0] || v.coords[0] + 1 == u.coords[0];
  }

  std::optional<VertexId> vertex_at(std::size_t index) const override {
    return VertexId{"r", {static_cast<Coord>(index) + 1}};
  }
};

}  // namespace

GraphPtr extended_star_graph() {
  static const GraphPtr g = std::make_shared<const ExtendedStarGraph>();
  return g;
}

GraphPtr clique_chain_graph() {
  static const GraphPtr g = std::make_shared<const CliqueChainGraph>();
  return g;
}

GraphPtr ray_graph() {
  static const GraphPtr g = std::make_shared<const RayGraph>();
  return g;
}

}  // namespace twinbench
