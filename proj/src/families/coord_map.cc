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

#include "coord_map.h"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>

namespace twinbench::internal {
namespace {

std::optional<std::vector<Atom>> map_box(
    const Box& b, const CoordMapSpec& spec,
    const std::function<ConstraintImage>& on_set) {
  if (b.tag != spec.tag || b.coords.size() != spec.domain.size()) {
    return std::vector<Atom>{b};
  }
  Box clipped{b.tag, {}};
  for (std::size_t i = 0; i < b.coords.size(); ++i) {
    auto c = coord_intersection(b.coords[i], spec.domain[i]);
    if (!c) return std::nullopt;
    if (coord_empty(*c)) return std::vector<Atom>{};
    clipped.coords.push_back(std::move(*c));
  }
  const auto images = on_set(clipped.coords[spec.position]);
  if (!images) return std::nullopt;
  std::vector<Atom> out;
  for (const auto& c : *images) {
    Box piece = clipped;
    piece.coords[spec.position] = c;
    if (!box_empty(piece)) out.emplace_back(std::move(piece));
  }
  return out;
}

bool is_point_form(const CoordConstraint& c) {
  return std::holds_alternative<EqualTo>(c) || std::holds_alternative<InSet>(c);
}

// [lo, hi] as a constraint list; empty when lo > hi.
std::vector<CoordConstraint> range(Coord lo, Coord hi) {
  if (lo > hi || lo == 0) return {};
  return {InRange{lo, hi}};
}

}  // namespace

std::optional<std::vector<CoordConstraint>> pointwise(
    const CoordConstraint& c,
    const std::function<std::optional<Coord>(Coord)>& f) {
  if (const auto* e = std::get_if<EqualTo>(&c)) {
    const auto x = f(e->value);
    if (!x) return std::vector<CoordConstraint>{};
    return std::vector<CoordConstraint>{EqualTo{*x}};
  }
  if (const auto* s = std::get_if<InSet>(&c)) {
    std::vector<Coord> values;
    for (Coord v : s->values) {
      if (const auto x = f(v)) values.push_back(*x);
    }
    if (values.empty()) return std::vector<CoordConstraint>{};
    return std::vector<CoordConstraint>{make_in_set(std::move(values))};
  }
  return std::nullopt;
}

MapPtr coordinate_map(CoordMapSpec spec) {
  auto s = std::make_shared<const CoordMapSpec>(std::move(spec));
  MapParts parts;
  parts.name = s->name;
  parts.source = s->source;
  parts.target = s->target;
  parts.forward = [s](const VertexId& v) {
    if (v.tag != s->tag || v.coords.size() <= s->position) return v;
    VertexId out = v;
    out.coords[s->position] = s->bijection.forward(v.coords[s->position]);
    return out;
  };
  parts.backward = [s](const VertexId& w) -> std::optional<VertexId> {
    if (w.tag != s->tag || w.coords.size() <= s->position) return w;
    std::optional<Coord> x;
    try {
      x = s->bijection.backward(w.coords[s->position]);
    } catch (const std::overflow_error&) {
      return std::nullopt;
    }
    if (!x) return std::nullopt;
    VertexId out = w;
    out.coords[s->position] = *x;
    return out;
  };
  parts.support = s->support;
  parts.image_of_box = [s](const Box& b) {
    return map_box(b, *s, s->bijection.forward_set);
  };
  parts.preimage_of_box = [s](const Box& b) {
    return map_box(b, *s, s->bijection.backward_set);
  };
  return make_map(std::move(parts));
}

CoordBijection index_shift(Coord from) {
  CoordBijection b;
  b.forward = [from](Coord m) {
    if (m < from) return m;
    if (m == kUnbounded - 1) throw std::overflow_error("coordinate overflow");
    return m + 1;
  };
  b.backward = [from](Coord m) -> std::optional<Coord> {
    if (m < from) return m;
    if (m == from) return std::nullopt;
    return m - 1;
  };
  b.forward_set = [from, fwd = b.forward](const CoordConstraint& c)
      -> std::optional<std::vector<CoordConstraint>> {
    if (is_point_form(c)) {
      return pointwise(c, [&fwd](Coord x) { return std::optional<Coord>(fwd(x)); });
    }
    std::optional<InRange> r;
    if (std::holds_alternative<AnyCoord>(c)) r = InRange{};
    if (const auto* p = std::get_if<InRange>(&c)) r = *p;
    if (!r) return std::nullopt;
    auto out = range(r->lo, std::min(r->hi, from - 1));
    const Coord lo = std::max(r->lo, from) + 1;
    const Coord hi = r->hi == kUnbounded ? kUnbounded : r->hi + 1;
    if (r->hi >= from) {
      for (auto& piece : range(lo, hi)) out.push_back(piece);
    }
    return out;
  };
  b.backward_set = [from, bwd = b.backward](const CoordConstraint& c)
      -> std::optional<std::vector<CoordConstraint>> {
    if (is_point_form(c)) return pointwise(c, bwd);
    if (std::holds_alternative<AnyCoord>(c)) {
      return std::vector<CoordConstraint>{AnyCoord{}};
    }
    const auto* r = std::get_if<InRange>(&c);
    if (r == nullptr) return std::nullopt;
    auto out = range(r->lo, std::min(r->hi, from - 1));
    if (r->hi > from) {
      const Coord lo = std::max(r->lo, from + 1) - 1;
      const Coord hi = r->hi == kUnbounded ? kUnbounded : r->hi - 1;
      for (auto& piece : range(lo, hi)) out.push_back(piece);
    }
    return out;
  };
  return b;
}

CoordBijection transposition(Coord a, Coord b) {
  const auto swap = [a, b](Coord x) { return x == a ? b : x == b ? a : x; };
  CoordBijection t;
  t.forward = swap;
  t.backward = [swap](Coord x) { return std::optional<Coord>(swap(x)); };
  t.forward_set = [a, b, swap](const CoordConstraint& c)
      -> std::optional<std::vector<CoordConstraint>> {
    if (is_point_form(c)) {
      return pointwise(c, [&swap](Coord x) { return std::optional<Coord>(swap(x)); });
    }
    // Sets holding both or neither transposed value are fixed.
    if (coord_contains(c, a) == coord_contains(c, b)) {
      return std::vector<CoordConstraint>{c};
    }
    return std::nullopt;
  };
  t.backward_set = t.forward_set;
  return t;
}

}  // namespace twinbench::internal
