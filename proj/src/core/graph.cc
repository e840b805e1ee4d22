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

#include "twinbench/graph.h"

#include <utility>

#include "twinbench/errors.h"

namespace twinbench {

bool Graph::contains(const VertexId& v) const {
  if (auto reason = malformed(v)) {
    throw MalformedVertex(family_id() + ": " + to_string(v) + ": " + *reason);
  }
  return is_member(v);
}

bool Graph::adjacent(const VertexId& u, const VertexId& v) const {
  for (const VertexId* x : {&u, &v}) {
    if (!contains(*x)) {
      throw NotAMember(to_string(*x) + " is not a vertex of " + family_id(),
                       *x);
    }
  }
  if (u == v) return false;
  return adjacent_members(u, v);
}

std::vector<VertexId> Graph::first(std::size_t n) const {
  std::vector<VertexId> out;
  if (n == 0) return out;
  out.reserve(n);
  enumerate([&](const VertexId& v) {
    out.push_back(v);
    return out.size() < n;
  });
  return out;
}

void IndexedGraph::enumerate(
    const std::function<bool(const VertexId&)>& visit) const {
  for (std::size_t i = 0;; ++i) {
    const auto v = vertex_at(i);
    if (!v || !visit(*v)) return;
  }
}

namespace {

class PredicateGraph final : public IndexedGraph {
 public:
  explicit PredicateGraph(PredicateGraphParts parts)
      : parts_(std::move(parts)) {}

  std::string family_id() const override { return parts_.family; }
  std::optional<std::string> malformed(const VertexId& v) const override {
    return parts_.malformed ? parts_.malformed(v) : std::nullopt;
  }
  bool is_member(const VertexId& v) const override { return parts_.member(v); }
  bool adjacent_members(const VertexId& u, const VertexId& v) const override {
    return u != v && parts_.adjacent(u, v);
  }
  std::optional<VertexId> vertex_at(std::size_t index) const override {
    return parts_.vertex_at(index);
  }

 private:
  PredicateGraphParts parts_;
};

class RemovedGraph final : public Graph {
 public:
  RemovedGraph(GraphPtr parent, SubgraphSpec removed)
      : parent_(std::move(parent)), removed_(std::move(removed)) {}

  std::string family_id() const override {
    return parent_->family_id() + "\\" + removed_.to_string();
  }
  std::string root_family() const override { return parent_->root_family(); }
  std::optional<std::string> malformed(const VertexId& v) const override {
    return parent_->malformed(v);
  }
  bool is_member(const VertexId& v) const override {
    return parent_->is_member(v) && !removed_.contains(v);
  }
  bool adjacent_members(const VertexId& u, const VertexId& v) const override {
    return parent_->adjacent_members(u, v);
  }
  void enumerate(
      const std::function<bool(const VertexId&)>& visit) const override {
    std::size_t misses = 0;
    parent_->enumerate([&](const VertexId& v) {
      if (removed_.contains(v)) return ++misses < kRemovedScanBudget;
      misses = 0;
      return visit(v);
    });
  }
  SubgraphSpec removed_from_root() const override {
    const SubgraphSpec upstream = parent_->removed_from_root();
    if (spec_empty(upstream).value_or(false)) return removed_;
    return SubgraphSpec::union_of({upstream, removed_});
  }
  const Graph* parent() const override { return parent_.get(); }

  const SubgraphSpec& removed() const { return removed_; }

 private:
  GraphPtr parent_;
  SubgraphSpec removed_;
};

}  // namespace

GraphPtr make_predicate_graph(PredicateGraphParts parts) {
  return std::make_shared<PredicateGraph>(std::move(parts));
}

GraphPtr remove(GraphPtr graph, SubgraphSpec removed) {
  return std::make_shared<RemovedGraph>(std::move(graph), std::move(removed));
}

const SubgraphSpec* removal_spec(const Graph& graph) {
  if (const auto* r = dynamic_cast<const RemovedGraph*>(&graph)) {
    return &r->removed();
  }
  return nullptr;
}

}  // namespace twinbench
