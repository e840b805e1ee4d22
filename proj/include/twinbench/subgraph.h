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

#ifndef TWINBENCH_SUBGRAPH_H_
#define TWINBENCH_SUBGRAPH_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twinbench/coord_constraint.h"
#include "twinbench/vertex.h"

namespace twinbench {

class Graph;
class VertexMap;
struct SpecNode;

// A symbolic, possibly infinite set of vertices. Membership is decidable for
// every form; disjointness and containment are decided exactly whenever both
// sides normalize (see normalize()), and otherwise by a bounded scan that is
// reported as approximate.
class SubgraphSpec {
 public:
  struct Finite {
    std::vector<VertexId> vertices;  // sorted, unique
  };
  struct CoordSet {
    std::string tag;
    std::vector<CoordConstraint> coords;
  };
  struct Image {
    std::shared_ptr<const VertexMap> map;
    std::shared_ptr<const SpecNode> base;
  };
  struct Union {
    std::vector<std::shared_ptr<const SpecNode>> parts;
  };
  struct Difference {
    std::shared_ptr<const SpecNode> lhs;
    std::shared_ptr<const SpecNode> rhs;
  };
  using Node = std::variant<Finite, CoordSet, Image, Union, Difference>;

  // The empty set.
  SubgraphSpec();

  static SubgraphSpec finite(std::vector<VertexId> vertices);
  static SubgraphSpec coord_set(std::string tag,
                                std::vector<CoordConstraint> coords);
  // {m(u) : u in base, u a member of m's source}.
  static SubgraphSpec image(std::shared_ptr<const VertexMap> map,
                            const SubgraphSpec& base);
  static SubgraphSpec union_of(const std::vector<SubgraphSpec>& parts);
  static SubgraphSpec difference(const SubgraphSpec& lhs,
                                 const SubgraphSpec& rhs);

  static SubgraphSpec wrap(std::shared_ptr<const SpecNode> node);

  bool contains(const VertexId& v) const;
  std::string to_string() const;
  const Node& node() const;
  const std::shared_ptr<const SpecNode>& handle() const { return node_; }

 private:
  explicit SubgraphSpec(std::shared_ptr<const SpecNode> node);
  std::shared_ptr<const SpecNode> node_;
};

struct SpecNode {
  SubgraphSpec::Node value;
};

// A product set: vertices with `tag` whose i-th coordinate satisfies
// coords[i].
struct Box {
  std::string tag;
  std::vector<CoordConstraint> coords;
};

bool box_contains(const Box& box, const VertexId& v);
bool box_empty(const Box& box);
std::string to_string(const Box& box);

using Atom = std::variant<VertexId, Box>;

// Union of points and boxes; the exact representation that decisions work
// on.
struct NormalForm {
  std::vector<Atom> atoms;

  bool contains(const VertexId& v) const;
  bool empty() const;
  // All members when the set is finite (and small enough to list).
  std::optional<std::vector<VertexId>> points(
      std::size_t limit = 100'000) const;
};

std::optional<NormalForm> normalize(const SubgraphSpec& spec);

// Used when normalization fails: the first `bound` vertices of `graph` are
// scanned instead.
struct ScanScope {
  std::shared_ptr<const Graph> graph;
  std::size_t bound = 10'000;
};

struct DisjointVerdict {
  enum class Kind { kDisjoint, kIntersecting, kApproximate };
  Kind kind = Kind::kApproximate;
  std::optional<VertexId> witness;
  // Number of vertices scanned for an approximate verdict; 0 when exact.
  std::size_t scan_bound = 0;
};

DisjointVerdict spec_disjoint(const SubgraphSpec& a, const SubgraphSpec& b,
                              const ScanScope* scope = nullptr);

struct ContainmentVerdict {
  enum class Kind { kContained, kNotContained, kApproximate };
  Kind kind = Kind::kApproximate;
  std::optional<VertexId> witness;  // member of inner missing from outer
  std::size_t scan_bound = 0;
};

// Is inner ⊆ outer?
ContainmentVerdict spec_contains(const SubgraphSpec& outer,
                                 const SubgraphSpec& inner,
                                 const ScanScope* scope = nullptr);

// Exact set equality when both differences normalize; nullopt otherwise.
std::optional<bool> spec_equal(const SubgraphSpec& a, const SubgraphSpec& b);

// Exact emptiness when the spec normalizes; nullopt otherwise.
std::optional<bool> spec_empty(const SubgraphSpec& spec);

std::string to_string(DisjointVerdict::Kind kind);
std::string to_string(ContainmentVerdict::Kind kind);

}  // namespace twinbench

#endif  // TWINBENCH_SUBGRAPH_H_
