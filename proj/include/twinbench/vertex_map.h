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

#ifndef TWINBENCH_VERTEX_MAP_H_
#define TWINBENCH_VERTEX_MAP_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twinbench/graph.h"
#include "twinbench/subgraph.h"
#include "twinbench/vertex.h"

namespace twinbench {

class VertexMap;
using MapPtr = std::shared_ptr<const VertexMap>;

// Symbolic image of a box under a map, used by normalize() on Image specs.
// Returning nullopt means "no exact representation".
using BoxTransform = std::function<std::optional<std::vector<Atom>>(const Box&)>;

struct MapParts {
  std::string name;
  GraphPtr source;
  GraphPtr target;
  // Defined on members of source.
  std::function<VertexId(const VertexId&)> forward;
  // The unique u with forward(u) == w, or nullopt when w is not in the image.
  std::function<std::optional<VertexId>(const VertexId&)> backward;
  // forward is the identity outside this set.
  SubgraphSpec support;
  BoxTransform image_of_box;
  BoxTransform preimage_of_box;
};

// An injective vertex map between presentations that always carries its
// inverse, so surjectivity onto a window can be checked without search.
class VertexMap {
 public:
  explicit VertexMap(MapParts parts);

  const std::string& name() const { return parts_.name; }
  const GraphPtr& source() const { return parts_.source; }
  const GraphPtr& target() const { return parts_.target; }
  const SubgraphSpec& support() const { return parts_.support; }

  // Throws NotAMember unless v is a member of source().
  VertexId apply(const VertexId& v) const;
  VertexId apply_unchecked(const VertexId& v) const {
    return parts_.forward(v);
  }
  // Member u of source() with apply(u) == w, if any.
  std::optional<VertexId> preimage(const VertexId& w) const;

  std::optional<std::vector<Atom>> image_of_box(const Box& box) const;
  std::optional<std::vector<Atom>> preimage_of_box(const Box& box) const;

  const MapParts& parts() const { return parts_; }

 private:
  MapParts parts_;
};

MapPtr make_map(MapParts parts);
MapPtr identity_map(GraphPtr graph);

// outer ∘ inner. Throws FamilyMismatch when the root families differ.
MapPtr compose(const MapPtr& outer, const MapPtr& inner);
MapPtr inverse(const MapPtr& map);
// Repeated composition; |k| <= kMaxPower, power(m, 0) is the identity on
// m's source.
inline constexpr int kMaxPower = 64;
MapPtr power(const MapPtr& map, int k);

// The same map viewed as G' -> G'. Checks on the first `window` vertices of
// G' that images stay inside G'; throws WitnessError naming the escaping
// vertex otherwise.
MapPtr restrict_to(const MapPtr& map, const GraphPtr& sub,
                   std::size_t window = 200);

// Extends a map on G' = remove(G, S) by the identity on S. The map must fix
// every vertex of G' adjacent to S, and the extension must preserve
// adjacency, both checked on the first `window` vertices of G; violations
// throw WitnessError carrying the offending pair.
MapPtr lift_by_identity(const MapPtr& map, const GraphPtr& graph,
                        std::size_t window = 200);

}  // namespace twinbench

#endif  // TWINBENCH_VERTEX_MAP_H_
