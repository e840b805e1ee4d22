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

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "twinbench/errors.h"
#include "twinbench/selfcontain.h"

namespace twinbench {
namespace {

using IndexStep = std::function<std::optional<std::size_t>(std::size_t)>;

std::optional<std::vector<Atom>> chain(const MapPtr& first,
                                       const MapPtr& second, const Box& b,
                                       bool forward) {
  const auto mid = forward ? first->image_of_box(b) : first->preimage_of_box(b);
  if (!mid) return std::nullopt;
  std::vector<Atom> out;
  for (const Atom& a : *mid) {
    if (const auto* p = std::get_if<VertexId>(&a)) {
      auto q = forward ? std::optional<VertexId>(second->apply_unchecked(*p))
                       : second->preimage(*p);
      if (q) out.emplace_back(std::move(*q));
      continue;
    }
    const Box& m = std::get<Box>(a);
    auto next = forward ? second->image_of_box(m) : second->preimage_of_box(m);
    if (!next) return std::nullopt;
    out.insert(out.end(), next->begin(), next->end());
  }
  return out;
}

bool box_within(const SubgraphSpec& outer, const Box& b) {
  return spec_contains(outer, SubgraphSpec::coord_set(b.tag, b.coords)).kind ==
         ContainmentVerdict::Kind::kContained;
}

bool box_avoids(const SubgraphSpec& s, const Box& b) {
  return spec_disjoint(s, SubgraphSpec::coord_set(b.tag, b.coords)).kind ==
         DisjointVerdict::Kind::kDisjoint;
}

// The copy that would have to contain all of b: the one holding its least
// element.
std::optional<std::size_t> box_copy(const AlternatingFamily& fam,
                                    const Box& b) {
  VertexId first{b.tag, std::vector<Coord>{}};
  for (const CoordConstraint& c : b.coords) {
    const auto x = coord_next_at_least(c, 1);
    if (!x) return std::nullopt;
    first.coords.push_back(*x);
  }
  const auto i = fam.locate(first);
  if (!i || *i > fam.max_index || !box_within(fam.copy(*i), b)) {
    return std::nullopt;
  }
  return i;
}

std::size_t located(const AlternatingFamily& fam, const VertexId& v,
                    std::size_t i) {
  if (!fam.copy(i).contains(v)) {
    throw WitnessError(fam.name + ": locator places " + to_string(v) +
                           " in copy " + std::to_string(i) +
                           " which does not contain it",
                       v);
  }
  return i;
}

// Sends H_i onto H_{next(i)} by alt(next(i)) ∘ alt(i); prev inverts next.
// Vertices outside every copy are fixed.
MapPtr copy_shift(const AlternatingFamily& fam, std::string name,
                  IndexStep next, IndexStep prev) {
  check_copies_disjoint(fam);
  auto famp = std::make_shared<const AlternatingFamily>(fam);
  MapParts parts;
  parts.name = std::move(name);
  parts.source = fam.graph;
  parts.target = remove(fam.graph, fam.copy(0));
  parts.forward = [famp, next](const VertexId& v) {
    const auto i = famp->locate(v);
    if (!i) return v;
    located(*famp, v, *i);
    const auto to = next(*i);
    if (!to || *to > famp->max_index) {
      throw std::out_of_range(famp->name + ": copy index " +
                              std::to_string(*i) + " has no successor");
    }
    if (*to == *i) return v;
    return famp->alt(*to)->apply_unchecked(famp->alt(*i)->apply_unchecked(v));
  };
  parts.backward = [famp, prev](const VertexId& w) -> std::optional<VertexId> {
    const auto i = famp->locate(w);
    if (!i) return w;
    const auto from = prev(*i);
    if (!from) return std::nullopt;
    if (*from == *i) return w;
    const auto mid = famp->alt(*i)->preimage(w);
    if (!mid) return std::nullopt;
    return famp->alt(*from)->preimage(*mid);
  };
  parts.support = fam.support;
  parts.image_of_box = [famp, next](const Box& b)
      -> std::optional<std::vector<Atom>> {
    if (box_avoids(famp->support, b)) return std::vector<Atom>{b};
    const auto i = box_copy(*famp, b);
    if (!i) return std::nullopt;
    const auto to = next(*i);
    if (!to || *to > famp->max_index) return std::nullopt;
    if (*to == *i) return std::vector<Atom>{b};
    return chain(famp->alt(*i), famp->alt(*to), b, true);
  };
  parts.preimage_of_box = [famp, prev](const Box& b)
      -> std::optional<std::vector<Atom>> {
    if (box_avoids(famp->support, b)) return std::vector<Atom>{b};
    const auto i = box_copy(*famp, b);
    if (!i) return std::nullopt;
    const auto from = prev(*i);
    if (!from) return std::vector<Atom>{};
    if (*from == *i) return std::vector<Atom>{b};
    return chain(famp->alt(*i), famp->alt(*from), b, false);
  };
  return make_map(std::move(parts));
}

}  // namespace

void check_copies_disjoint(const AlternatingFamily& fam, std::size_t limit) {
  const ScanScope scope{fam.graph, 2'000};
  for (std::size_t i = 0; i < limit && i <= fam.max_index; ++i) {
    for (std::size_t j = i + 1; j < limit && j <= fam.max_index; ++j) {
      const auto v = spec_disjoint(fam.copy(i), fam.copy(j), &scope);
      if (v.kind == DisjointVerdict::Kind::kIntersecting) {
        throw WitnessError(fam.name + ": copies " + std::to_string(i) +
                               " and " + std::to_string(j) + " share " +
                               (v.witness ? to_string(*v.witness) : "?"),
                           v.witness);
      }
    }
  }
}

MapPtr standard_isomorphism(const AlternatingFamily& fam) {
  return copy_shift(
      fam, "std",
      [](std::size_t i) -> std::optional<std::size_t> { return i + 1; },
      [](std::size_t i) -> std::optional<std::size_t> {
        if (i == 0) return std::nullopt;
        return i - 1;
      });
}

MapPtr standard_isomorphism_fixing_first(const AlternatingFamily& fam) {
  return copy_shift(
      fam, "fstar",
      [](std::size_t i) -> std::optional<std::size_t> {
        if (i == 0) return 2;
        if (i == 1) return 1;
        return i + 1;
      },
      [](std::size_t i) -> std::optional<std::size_t> {
        if (i == 0) return std::nullopt;
        if (i == 1) return 1;
        if (i == 2) return 0;
        return i - 1;
      });
}

MapPtr beta(const AlternatingFamily& fam, std::size_t i, std::size_t j) {
  if (i == j) {
    throw std::invalid_argument("beta(" + std::to_string(i) + "," +
                                std::to_string(j) +
                                ") needs two distinct copies");
  }
  if (i > fam.max_index || j > fam.max_index) {
    throw std::invalid_argument(fam.name + " realizes copies up to " +
                                std::to_string(fam.max_index));
  }
  auto famp = std::make_shared<const AlternatingFamily>(fam);
  const MapPtr ai = fam.alt(i);
  const MapPtr aj = fam.alt(j);
  const SubgraphSpec both = SubgraphSpec::union_of({fam.copy(i), fam.copy(j)});
  MapParts parts;
  parts.name = "beta(" + std::to_string(i) + "," + std::to_string(j) + ")";
  parts.source = fam.graph;
  parts.target = fam.graph;
  parts.forward = [famp, i, j, ai, aj](const VertexId& v) {
    const auto k = famp->locate(v);
    if (k == j) return ai->apply_unchecked(aj->apply_unchecked(v));
    if (k == i) return aj->apply_unchecked(ai->apply_unchecked(v));
    return v;
  };
  parts.backward = [famp, i, j, ai, aj](
                       const VertexId& w) -> std::optional<VertexId> {
    const auto k = famp->locate(w);
    if (k != i && k != j) return w;
    const MapPtr& outer = k == i ? ai : aj;
    const MapPtr& inner = k == i ? aj : ai;
    const auto mid = outer->preimage(w);
    if (!mid) return std::nullopt;
    return inner->preimage(*mid);
  };
  parts.support = both;
  const SubgraphSpec ci = fam.copy(i);
  const SubgraphSpec cj = fam.copy(j);
  parts.image_of_box = [both, ci, cj, ai, aj](const Box& b)
      -> std::optional<std::vector<Atom>> {
    if (box_avoids(both, b)) return std::vector<Atom>{b};
    if (box_within(cj, b)) return chain(aj, ai, b, true);
    if (box_within(ci, b)) return chain(ai, aj, b, true);
    return std::nullopt;
  };
  parts.preimage_of_box = [both, ci, cj, ai, aj](const Box& b)
      -> std::optional<std::vector<Atom>> {
    if (box_avoids(both, b)) return std::vector<Atom>{b};
    if (box_within(ci, b)) return chain(ai, aj, b, false);
    if (box_within(cj, b)) return chain(aj, ai, b, false);
    return std::nullopt;
  };
  return make_map(std::move(parts));
}

}  // namespace twinbench
