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

#include "twinbench/vertex_map.h"

#include <stdexcept>
#include <utility>

#include "twinbench/errors.h"

namespace twinbench {
namespace {

bool safe_member(const Graph& g, const VertexId& v) {
  try {
    return g.contains(v);
  } catch (const MalformedVertex&) {
    return false;
  }
}

// Maps a symbolic image produced by `inner` through `outer`.
std::optional<std::vector<Atom>> chain_boxes(
    const std::optional<std::vector<Atom>>& atoms,
    const std::function<std::optional<VertexId>(const VertexId&)>& on_point,
    const std::function<std::optional<std::vector<Atom>>(const Box&)>&
        on_box) {
  if (!atoms) return std::nullopt;
  std::vector<Atom> out;
  for (const Atom& a : *atoms) {
    if (const auto* p = std::get_if<VertexId>(&a)) {
      if (auto q = on_point(*p)) out.emplace_back(std::move(*q));
      continue;
    }
    auto mapped = on_box(std::get<Box>(a));
    if (!mapped) return std::nullopt;
    for (auto& m : *mapped) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

VertexMap::VertexMap(MapParts parts) : parts_(std::move(parts)) {
  if (!parts_.source || !parts_.target || !parts_.forward ||
      !parts_.backward) {
    throw std::invalid_argument("vertex map '" + parts_.name +
                                "' is missing a component");
  }
}

VertexId VertexMap::apply(const VertexId& v) const {
  if (!parts_.source->contains(v)) {
    throw NotAMember(name() + ": " + to_string(v) + " is not a vertex of " +
                         parts_.source->family_id(),
                     v);
  }
  return parts_.forward(v);
}

std::optional<VertexId> VertexMap::preimage(const VertexId& w) const {
  std::optional<VertexId> u;
  try {
    u = parts_.backward(w);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (!u || !safe_member(*parts_.source, *u)) return std::nullopt;
  return u;
}

std::optional<std::vector<Atom>> VertexMap::image_of_box(const Box& box) const {
  if (!parts_.image_of_box) return std::nullopt;
  return parts_.image_of_box(box);
}

std::optional<std::vector<Atom>> VertexMap::preimage_of_box(
    const Box& box) const {
  if (!parts_.preimage_of_box) return std::nullopt;
  return parts_.preimage_of_box(box);
}

MapPtr make_map(MapParts parts) {
  return std::make_shared<const VertexMap>(std::move(parts));
}

MapPtr identity_map(GraphPtr graph) {
  const BoxTransform same = [](const Box& b) {
    return std::optional<std::vector<Atom>>(std::vector<Atom>{b});
  };
  return make_map(MapParts{
      .name = "id",
      .source = graph,
      .target = graph,
      .forward = [](const VertexId& v) { return v; },
      .backward =
          [](const VertexId& w) { return std::optional<VertexId>(w); },
      .support = SubgraphSpec(),
      .image_of_box = same,
      .preimage_of_box = same,
  });
}

MapPtr compose(const MapPtr& outer, const MapPtr& inner) {
  if (outer->source()->root_family() != inner->target()->root_family()) {
    throw FamilyMismatch("cannot compose " + outer->name() + " (on " +
                         outer->source()->root_family() + ") after " +
                         inner->name() + " (into " +
                         inner->target()->root_family() + ")");
  }
  MapParts parts;
  parts.name = outer->name() + "*" + inner->name();
  parts.source = inner->source();
  parts.target = outer->target();
  parts.forward = [outer, inner](const VertexId& v) {
    return outer->apply(inner->apply_unchecked(v));
  };
  parts.backward = [outer, inner](const VertexId& w) -> std::optional<VertexId> {
    const auto mid = outer->preimage(w);
    if (!mid) return std::nullopt;
    return inner->preimage(*mid);
  };
  parts.support = SubgraphSpec::union_of({outer->support(), inner->support()});
  parts.image_of_box = [outer, inner](const Box& b) {
    return chain_boxes(
        inner->image_of_box(b),
        [&outer](const VertexId& p) -> std::optional<VertexId> {
          if (!safe_member(*outer->source(), p)) return std::nullopt;
          return outer->apply_unchecked(p);
        },
        [&outer](const Box& m) { return outer->image_of_box(m); });
  };
  parts.preimage_of_box = [outer, inner](const Box& b) {
    return chain_boxes(
        outer->preimage_of_box(b),
        [&inner](const VertexId& p) { return inner->preimage(p); },
        [&inner](const Box& m) { return inner->preimage_of_box(m); });
  };
  return make_map(std::move(parts));
}

MapPtr inverse(const MapPtr& map) {
  MapParts parts;
  parts.name = map->name() + "^-1";
  parts.source = map->target();
  parts.target = map->source();
  parts.forward = [map](const VertexId& w) {
    auto u = map->preimage(w);
    if (!u) {
      throw NotAMember(to_string(w) + " is not in the image of " +
                           map->name(),
                       w);
    }
    return *u;
  };
  parts.backward = [map](const VertexId& u) -> std::optional<VertexId> {
    if (!safe_member(*map->source(), u)) return std::nullopt;
    return map->apply_unchecked(u);
  };
  parts.support = map->support();
  parts.image_of_box = [map](const Box& b) { return map->preimage_of_box(b); };
  parts.preimage_of_box = [map](const Box& b) { return map->image_of_box(b); };
  return make_map(std::move(parts));
}

MapPtr power(const MapPtr& map, int k) {
  if (k > kMaxPower || k < -kMaxPower) {
    throw std::out_of_range("power exponent " + std::to_string(k) +
                            " exceeds the supported range of +-" +
                            std::to_string(kMaxPower));
  }
  if (k == 0) return identity_map(map->source());
  const MapPtr base = k > 0 ? map : inverse(map);
  const int n = k > 0 ? k : -k;
  MapPtr result = base;
  for (int i = 1; i < n; ++i) result = compose(base, result);
  MapParts parts = result->parts();
  parts.name = map->name() + "^" + std::to_string(k);
  return make_map(std::move(parts));
}

MapPtr restrict_to(const MapPtr& map, const GraphPtr& sub,
                   std::size_t window) {
  for (const VertexId& v : sub->first(window)) {
    if (!safe_member(*map->source(), v)) {
      throw WitnessError(map->name() + " is not defined on " + to_string(v),
                         v);
    }
    const VertexId image = map->apply_unchecked(v);
    if (!safe_member(*sub, image)) {
      throw WitnessError(map->name() + " sends " + to_string(v) + " to " +
                             to_string(image) + " outside " +
                             sub->family_id(),
                         v, image);
    }
  }
  MapParts parts = map->parts();
  parts.source = sub;
  parts.target = sub;
  const SubgraphSpec removed = sub->removed_from_root();
  parts.image_of_box = [map, removed](const Box& b) {
    const auto kept = normalize(SubgraphSpec::difference(
        SubgraphSpec::coord_set(b.tag, b.coords), removed));
    if (!kept) return std::optional<std::vector<Atom>>();
    return chain_boxes(
        kept->atoms,
        [&map](const VertexId& p) -> std::optional<VertexId> {
          if (!safe_member(*map->source(), p)) return std::nullopt;
          return map->apply_unchecked(p);
        },
        [&map](const Box& m) { return map->image_of_box(m); });
  };
  parts.preimage_of_box = [map, removed](const Box& b) {
    const auto images = map->preimage_of_box(b);
    if (!images) return std::optional<std::vector<Atom>>();
    NormalForm nf{*images};
    std::vector<SubgraphSpec> pieces;
    for (const Atom& a : nf.atoms) {
      if (const auto* p = std::get_if<VertexId>(&a)) {
        pieces.push_back(SubgraphSpec::finite({*p}));
      } else {
        const Box& box = std::get<Box>(a);
        pieces.push_back(SubgraphSpec::coord_set(box.tag, box.coords));
      }
    }
    const auto kept = normalize(
        SubgraphSpec::difference(SubgraphSpec::union_of(pieces), removed));
    if (!kept) return std::optional<std::vector<Atom>>();
    return std::optional<std::vector<Atom>>(kept->atoms);
  };
  return make_map(std::move(parts));
}

MapPtr lift_by_identity(const MapPtr& map, const GraphPtr& graph,
                        std::size_t window) {
  const Graph& sub = *map->source();
  const SubgraphSpec* removed = removal_spec(sub);
  if (removed == nullptr || sub.parent() != graph.get()) {
    throw std::invalid_argument(map->name() + " is not defined on a removal "
                                "of " + graph->family_id());
  }
  const SubgraphSpec cut = *removed;
  const std::vector<VertexId> verts = graph->first(window);
  std::vector<bool> in_cut(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    in_cut[i] = cut.contains(verts[i]);
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!in_cut[i]) continue;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (in_cut[j] || !graph->adjacent_members(verts[i], verts[j])) continue;
      if (map->apply_unchecked(verts[j]) != verts[j]) {
        throw WitnessError(map->name() + " moves " + to_string(verts[j]) +
                               ", a neighbour of removed vertex " +
                               to_string(verts[i]),
                           verts[i], verts[j]);
      }
    }
  }

  MapParts parts;
  parts.name = map->name();
  parts.source = graph;
  parts.target = graph;
  parts.forward = [map, cut](const VertexId& v) {
    return cut.contains(v) ? v : map->apply_unchecked(v);
  };
  parts.backward = [map, cut](const VertexId& w) -> std::optional<VertexId> {
    if (cut.contains(w)) return w;
    return map->preimage(w);
  };
  parts.support = map->support();
  MapPtr lifted = make_map(std::move(parts));

  std::vector<VertexId> images;
  images.reserve(verts.size());
  for (const VertexId& v : verts) images.push_back(lifted->apply_unchecked(v));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const bool before = graph->adjacent_members(verts[i], verts[j]);
      const bool after = images[i] != images[j] &&
                         graph->adjacent_members(images[i], images[j]);
      if (before != after) {
        throw WitnessError("lift of " + map->name() + " breaks adjacency of " +
                               to_string(verts[i]) + " and " +
                               to_string(verts[j]),
                           verts[i], verts[j]);
      }
    }
  }
  return lifted;
}

}  // namespace twinbench
