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

#ifndef TWINBENCH_GRAPH_H_
#define TWINBENCH_GRAPH_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twinbench/subgraph.h"
#include "twinbench/vertex.h"

namespace twinbench {

class Graph;
using GraphPtr = std::shared_ptr<const Graph>;

// Finite presentation of a (usually infinite) graph: decidable membership,
// decidable adjacency and a canonical enumeration of the vertex set.
// Presentations are immutable and safe to share between threads.
class Graph {
 public:
  virtual ~Graph() = default;

  virtual std::string family_id() const = 0;
  // Family of the presentation this one was carved out of by removals.
  virtual std::string root_family() const { return family_id(); }

  // Reason the term cannot name a vertex of this family at all (unknown tag,
  // wrong arity, zero coordinate), or nullopt when it is well formed.
  virtual std::optional<std::string> malformed(const VertexId& v) const = 0;

  // Throws MalformedVertex for malformed terms.
  bool contains(const VertexId& v) const;
  // Throws NotAMember when either endpoint is not a vertex.
  bool adjacent(const VertexId& u, const VertexId& v) const;

  // Membership for a well-formed term.
  virtual bool is_member(const VertexId& v) const = 0;
  // Adjacency for two known members.
  virtual bool adjacent_members(const VertexId& u,
                                const VertexId& v) const = 0;

  // Walks the canonical enumeration in order until `visit` returns false or
  // the vertex set is exhausted.
  virtual void enumerate(
      const std::function<bool(const VertexId&)>& visit) const = 0;
  // The first n enumerated vertices (fewer for small finite graphs).
  std::vector<VertexId> first(std::size_t n) const;

  // Everything removed between the root presentation and this one.
  virtual SubgraphSpec removed_from_root() const { return {}; }
  virtual const Graph* parent() const { return nullptr; }
};

// Enumeration defined by a total index function; nullopt ends a finite
// enumeration.
class IndexedGraph : public Graph {
 public:
  void enumerate(
      const std::function<bool(const VertexId&)>& visit) const override;
  virtual std::optional<VertexId> vertex_at(std::size_t index) const = 0;
};

// Presentation assembled from callables. Used for fixtures and small
// blueprint graphs; the built-in families have dedicated classes.
struct PredicateGraphParts {
  std::string family;
  std::function<std::optional<std::string>(const VertexId&)> malformed;
  std::function<bool(const VertexId&)> member;
  std::function<bool(const VertexId&, const VertexId&)> adjacent;
  std::function<std::optional<VertexId>(std::size_t)> vertex_at;
};
GraphPtr make_predicate_graph(PredicateGraphParts parts);

// G \ S: the subgraph induced on the members of G outside S. Enumeration is
// G's enumeration filtered; it gives up after kRemovedScanBudget consecutive
// removed vertices, so removing a cofinite set from an infinite graph yields
// a finite enumeration prefix.
inline constexpr std::size_t kRemovedScanBudget = std::size_t{1} << 22;
GraphPtr remove(GraphPtr graph, SubgraphSpec removed);

// The removal spec if `graph` was produced by remove(), relative to its
// immediate parent.
const SubgraphSpec* removal_spec(const Graph& graph);

}  // namespace twinbench

#endif  // TWINBENCH_GRAPH_H_
