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

#include "twinbench/subgraph.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "twinbench/graph.h"
#include "twinbench/vertex_map.h"

namespace twinbench {
namespace {

// Normal forms larger than this are treated as unrepresentable.
constexpr std::size_t kMaxAtoms = 20'000;
constexpr std::size_t kMaxBoxPoints = 4'096;

std::shared_ptr<const SpecNode> make_node(SubgraphSpec::Node node) {
  return std::make_shared<const SpecNode>(SpecNode{std::move(node)});
}

bool same_shape(const Box& a, const Box& b) {
  return a.tag == b.tag && a.coords.size() == b.coords.size();
}

std::optional<VertexId> first_element(const Box& box) {
  VertexId v{box.tag, std::vector<Coord>{}};
  for (const auto& c : box.coords) {
    const auto x = coord_next_at_least(c, 1);
    if (!x) return std::nullopt;
    v.coords.push_back(*x);
  }
  return v;
}

// Boxes whose every coordinate is finite become explicit points.
void push_atom(std::vector<Atom>& out, Atom atom) {
  if (auto* box = std::get_if<Box>(&atom)) {
    if (box_empty(*box)) return;
    std::vector<std::vector<Coord>> values;
    std::size_t total = 1;
    bool finite = true;
    for (const auto& c : box->coords) {
      auto vals = coord_finite_values(c, kMaxBoxPoints);
      if (!vals) {
        finite = false;
        break;
      }
      total *= vals->size();
      if (total > kMaxBoxPoints) {
        finite = false;
        break;
      }
      values.push_back(std::move(*vals));
    }
    if (finite) {
      std::vector<std::size_t> idx(values.size(), 0);
      while (true) {
        VertexId v{box->tag, std::vector<Coord>{}};
        for (std::size_t i = 0; i < values.size(); ++i) {
          v.coords.push_back(values[i][idx[i]]);
        }
        out.emplace_back(std::move(v));
        std::size_t i = values.size();
        while (true) {
          if (i == 0) return;
          --i;
          if (++idx[i] < values[i].size()) break;
          idx[i] = 0;
        }
      }
    }
  }
  out.push_back(std::move(atom));
}

struct Meet {
  bool intersects = false;
  std::optional<VertexId> witness;
};

Meet atoms_meet(const Atom& x, const Atom& y) {
  const auto* px = std::get_if<VertexId>(&x);
  const auto* py = std::get_if<VertexId>(&y);
  if (px && py) return {*px == *py, *px};
  if (px) return {box_contains(std::get<Box>(y), *px), *px};
  if (py) return {box_contains(std::get<Box>(x), *py), *py};
  const Box& a = std::get<Box>(x);
  const Box& b = std::get<Box>(y);
  if (!same_shape(a, b)) return {};
  VertexId w{a.tag, std::vector<Coord>{}};
  bool have_witness = true;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (!coord_intersects(a.coords[i], b.coords[i])) return {};
    if (const auto c = coord_first_common(a.coords[i], b.coords[i])) {
      w.coords.push_back(*c);
    } else {
      have_witness = false;
    }
  }
  Meet m{true, std::nullopt};
  if (have_witness) m.witness = std::move(w);
  return m;
}

bool atom_contains(const Atom& atom, const VertexId& v) {
  if (const auto* p = std::get_if<VertexId>(&atom)) return *p == v;
  return box_contains(std::get<Box>(atom), v);
}

Box box_of_point(const VertexId& v) {
  Box b{v.tag, {}};
  for (Coord c : v.coords) b.coords.emplace_back(EqualTo{c});
  return b;
}

// a \ b for two boxes, split coordinate by coordinate:
//   ⋃_i  (a_0∩b_0) × … × (a_{i-1}∩b_{i-1}) × (a_i \ b_i) × a_{i+1} × …
std::optional<std::vector<Atom>> box_minus_box(const Box& a, const Box& b) {
  if (!same_shape(a, b)) return std::vector<Atom>{a};
  if (!atoms_meet(a, b).intersects) return std::vector<Atom>{a};
  std::vector<Atom> out;
  Box prefix = a;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const auto diff = coord_difference(a.coords[i], b.coords[i]);
    if (!diff) return std::nullopt;
    for (const auto& piece : *diff) {
      Box part = prefix;
      part.coords[i] = piece;
      push_atom(out, std::move(part));
    }
    const auto meet = coord_intersection(a.coords[i], b.coords[i]);
    if (!meet) {
      // The remaining pieces need this intersection; fine only if nothing
      // is left to split.
      if (i + 1 == a.coords.size()) break;
      return std::nullopt;
    }
    prefix.coords[i] = *meet;
  }
  return out;
}

std::optional<std::vector<Atom>> atom_minus(const Atom& x, const Atom& y) {
  if (const auto* p = std::get_if<VertexId>(&x)) {
    if (atom_contains(y, *p)) return std::vector<Atom>{};
    return std::vector<Atom>{x};
  }
  const Box& a = std::get<Box>(x);
  if (const auto* q = std::get_if<VertexId>(&y)) {
    if (!box_contains(a, *q)) return std::vector<Atom>{x};
    return box_minus_box(a, box_of_point(*q));
  }
  return box_minus_box(a, std::get<Box>(y));
}

std::optional<NormalForm> subtract(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const Atom& x : a.atoms) {
    std::vector<Atom> pieces{x};
    for (const Atom& y : b.atoms) {
      std::vector<Atom> next;
      for (const Atom& p : pieces) {
        auto d = atom_minus(p, y);
        if (!d) return std::nullopt;
        for (auto& atom : *d) next.push_back(std::move(atom));
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
      if (pieces.size() > kMaxAtoms) return std::nullopt;
    }
    for (auto& p : pieces) out.atoms.push_back(std::move(p));
    if (out.atoms.size() > kMaxAtoms) return std::nullopt;
  }
  return out;
}

bool box_subset(const Box& inner, const Box& outer) {
  if (box_empty(inner)) return true;
  if (!same_shape(inner, outer)) return false;
  for (std::size_t i = 0; i < inner.coords.size(); ++i) {
    if (!coord_subset(inner.coords[i], outer.coords[i])) return false;
  }
  return true;
}

bool atom_subset(const Atom& inner, const Atom& outer) {
  if (const auto* p = std::get_if<VertexId>(&inner)) {
    return atom_contains(outer, *p);
  }
  if (const auto* q = std::get_if<Box>(&outer)) {
    return box_subset(std::get<Box>(inner), *q);
  }
  return box_empty(std::get<Box>(inner));
}

std::optional<VertexId> some_element(const NormalForm& nf) {
  for (const Atom& atom : nf.atoms) {
    if (const auto* p = std::get_if<VertexId>(&atom)) return *p;
    if (const auto v = first_element(std::get<Box>(atom))) return v;
  }
  return std::nullopt;
}

std::optional<NormalForm> normalize_node(const SubgraphSpec& spec);

std::optional<NormalForm> normalize_image(const SubgraphSpec::Image& image) {
  const auto base = normalize_node(SubgraphSpec::wrap(image.base));
  if (!base) return std::nullopt;
  NormalForm out;
  for (const Atom& atom : base->atoms) {
    if (const auto* p = std::get_if<VertexId>(&atom)) {
      bool member = false;
      try {
        member = image.map->source()->contains(*p);
      } catch (const std::invalid_argument&) {
        member = false;
      }
      if (member) push_atom(out.atoms, image.map->apply_unchecked(*p));
      continue;
    }
    const auto mapped = image.map->image_of_box(std::get<Box>(atom));
    if (!mapped) return std::nullopt;
    for (const Atom& m : *mapped) push_atom(out.atoms, m);
  }
  return out;
}

std::optional<NormalForm> normalize_node(const SubgraphSpec& spec) {
  const auto& node = spec.node();
  if (const auto* f = std::get_if<SubgraphSpec::Finite>(&node)) {
    NormalForm out;
    for (const auto& v : f->vertices) out.atoms.emplace_back(v);
    return out;
  }
  if (const auto* c = std::get_if<SubgraphSpec::CoordSet>(&node)) {
    NormalForm out;
    push_atom(out.atoms, Box{c->tag, c->coords});
    return out;
  }
  if (const auto* img = std::get_if<SubgraphSpec::Image>(&node)) {
    return normalize_image(*img);
  }
  if (const auto* u = std::get_if<SubgraphSpec::Union>(&node)) {
    NormalForm out;
    for (const auto& part : u->parts) {
      const auto nf = normalize_node(SubgraphSpec::wrap(part));
      if (!nf) return std::nullopt;
      out.atoms.insert(out.atoms.end(), nf->atoms.begin(), nf->atoms.end());
      if (out.atoms.size() > kMaxAtoms) return std::nullopt;
    }
    return out;
  }
  const auto& d = std::get<SubgraphSpec::Difference>(node);
  const auto lhs = normalize_node(SubgraphSpec::wrap(d.lhs));
  if (!lhs) return std::nullopt;
  const auto rhs = normalize_node(SubgraphSpec::wrap(d.rhs));
  if (!rhs) return std::nullopt;
  return subtract(*lhs, *rhs);
}

}  // namespace

SubgraphSpec::SubgraphSpec() : node_(make_node(Finite{})) {}

SubgraphSpec::SubgraphSpec(std::shared_ptr<const SpecNode> node)
    : node_(std::move(node)) {}

SubgraphSpec SubgraphSpec::wrap(std::shared_ptr<const SpecNode> node) {
  return SubgraphSpec(std::move(node));
}

SubgraphSpec SubgraphSpec::finite(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  return SubgraphSpec(make_node(Finite{std::move(vertices)}));
}

SubgraphSpec SubgraphSpec::coord_set(std::string tag,
                                     std::vector<CoordConstraint> coords) {
  return SubgraphSpec(make_node(CoordSet{std::move(tag), std::move(coords)}));
}

SubgraphSpec SubgraphSpec::image(std::shared_ptr<const VertexMap> map,
                                 const SubgraphSpec& base) {
  if (!map) throw std::invalid_argument("image of a null map");
  return SubgraphSpec(make_node(Image{std::move(map), base.node_}));
}

SubgraphSpec SubgraphSpec::union_of(const std::vector<SubgraphSpec>& parts) {
  Union u;
  for (const auto& p : parts) u.parts.push_back(p.node_);
  return SubgraphSpec(make_node(std::move(u)));
}

SubgraphSpec SubgraphSpec::difference(const SubgraphSpec& lhs,
                                      const SubgraphSpec& rhs) {
  return SubgraphSpec(make_node(Difference{lhs.node_, rhs.node_}));
}

const SubgraphSpec::Node& SubgraphSpec::node() const { return node_->value; }

bool SubgraphSpec::contains(const VertexId& v) const {
  const Node& n = node();
  if (const auto* f = std::get_if<Finite>(&n)) {
    return std::binary_search(f->vertices.begin(), f->vertices.end(), v);
  }
  if (const auto* c = std::get_if<CoordSet>(&n)) {
    return box_contains(Box{c->tag, c->coords}, v);
  }
  if (const auto* img = std::get_if<Image>(&n)) {
    const auto pre = img->map->preimage(v);
    return pre && wrap(img->base).contains(*pre);
  }
  if (const auto* u = std::get_if<Union>(&n)) {
    return std::any_of(u->parts.begin(), u->parts.end(),
                       [&v](const auto& p) { return wrap(p).contains(v); });
  }
  const auto& d = std::get<Difference>(n);
  return wrap(d.lhs).contains(v) && !wrap(d.rhs).contains(v);
}

std::string SubgraphSpec::to_string() const {
  const Node& n = node();
  if (const auto* f = std::get_if<Finite>(&n)) {
    std::string out = "{";
    for (std::size_t i = 0; i < f->vertices.size(); ++i) {
      if (i > 0) out += ',';
      out += twinbench::to_string(f->vertices[i]);
    }
    return out + "}";
  }
  if (const auto* c = std::get_if<CoordSet>(&n)) {
    return twinbench::to_string(Box{c->tag, c->coords});
  }
  if (const auto* img = std::get_if<Image>(&n)) {
    return "image(" + img->map->name() + "," + wrap(img->base).to_string() +
           ")";
  }
  if (const auto* u = std::get_if<Union>(&n)) {
    std::string out = "union(";
    for (std::size_t i = 0; i < u->parts.size(); ++i) {
      if (i > 0) out += ',';
      out += wrap(u->parts[i]).to_string();
    }
    return out + ")";
  }
  const auto& d = std::get<Difference>(n);
  return "diff(" + wrap(d.lhs).to_string() + "," + wrap(d.rhs).to_string() +
         ")";
}

bool box_contains(const Box& box, const VertexId& v) {
  if (v.tag != box.tag || v.coords.size() != box.coords.size()) return false;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (!coord_contains(box.coords[i], v.coords[i])) return false;
  }
  return true;
}

bool box_empty(const Box& box) {
  return std::any_of(box.coords.begin(), box.coords.end(),
                     [](const auto& c) { return coord_empty(c); });
}

std::string to_string(const Box& box) {
  std::string out = box.tag + "[";
  for (std::size_t i = 0; i < box.coords.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(box.coords[i]);
  }
  return out + "]";
}

bool NormalForm::contains(const VertexId& v) const {
  return std::any_of(atoms.begin(), atoms.end(),
                     [&v](const Atom& a) { return atom_contains(a, v); });
}

bool NormalForm::empty() const {
  return std::all_of(atoms.begin(), atoms.end(), [](const Atom& a) {
    const auto* b = std::get_if<Box>(&a);
    return b && box_empty(*b);
  });
}

std::optional<std::vector<VertexId>> NormalForm::points(
    std::size_t limit) const {
  std::vector<VertexId> out;
  for (const Atom& a : atoms) {
    if (const auto* p = std::get_if<VertexId>(&a)) {
      out.push_back(*p);
    } else if (!box_empty(std::get<Box>(a))) {
      return std::nullopt;
    }
    if (out.size() > limit) return std::nullopt;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<NormalForm> normalize(const SubgraphSpec& spec) {
  return normalize_node(spec);
}

DisjointVerdict spec_disjoint(const SubgraphSpec& a, const SubgraphSpec& b,
                              const ScanScope* scope) {
  using Kind = DisjointVerdict::Kind;
  const auto na = normalize(a);
  const auto nb = na ? normalize(b) : std::nullopt;
  if (na && nb) {
    for (const Atom& x : na->atoms) {
      for (const Atom& y : nb->atoms) {
        Meet m = atoms_meet(x, y);
        if (m.intersects) return {Kind::kIntersecting, std::move(m.witness), 0};
      }
    }
    return {Kind::kDisjoint, std::nullopt, 0};
  }
  DisjointVerdict verdict{Kind::kApproximate, std::nullopt, 0};
  if (scope == nullptr || !scope->graph) return verdict;
  verdict.scan_bound = scope->bound;
  for (const VertexId& v : scope->graph->first(scope->bound)) {
    if (a.contains(v) && b.contains(v)) {
      return {Kind::kIntersecting, v, 0};
    }
  }
  return verdict;
}

ContainmentVerdict spec_contains(const SubgraphSpec& outer,
                                 const SubgraphSpec& inner,
                                 const ScanScope* scope) {
  using Kind = ContainmentVerdict::Kind;
  const auto ni = normalize(inner);
  const auto no = ni ? normalize(outer) : std::nullopt;
  if (ni && no) {
    if (const auto rest = subtract(*ni, *no)) {
      if (rest->empty()) return {Kind::kContained, std::nullopt, 0};
      return {Kind::kNotContained, some_element(*rest), 0};
    }
    const bool covered =
        std::all_of(ni->atoms.begin(), ni->atoms.end(), [&](const Atom& x) {
          return std::any_of(
              no->atoms.begin(), no->atoms.end(),
              [&x](const Atom& y) { return atom_subset(x, y); });
        });
    if (covered) return {Kind::kContained, std::nullopt, 0};
  }
  ContainmentVerdict verdict{Kind::kApproximate, std::nullopt, 0};
  if (scope == nullptr || !scope->graph) return verdict;
  verdict.scan_bound = scope->bound;
  for (const VertexId& v : scope->graph->first(scope->bound)) {
    if (inner.contains(v) && !outer.contains(v)) {
      return {Kind::kNotContained, v, 0};
    }
  }
  return verdict;
}

std::optional<bool> spec_equal(const SubgraphSpec& a, const SubgraphSpec& b) {
  const auto ab = spec_contains(a, b);
  const auto ba = spec_contains(b, a);
  using Kind = ContainmentVerdict::Kind;
  if (ab.kind == Kind::kNotContained || ba.kind == Kind::kNotContained) {
    return false;
  }
  if (ab.kind == Kind::kContained && ba.kind == Kind::kContained) return true;
  return std::nullopt;
}

std::optional<bool> spec_empty(const SubgraphSpec& spec) {
  const auto nf = normalize(spec);
  if (!nf) return std::nullopt;
  return nf->empty();
}

std::string to_string(DisjointVerdict::Kind kind) {
  switch (kind) {
    case DisjointVerdict::Kind::kDisjoint:
      return "disjoint";
    case DisjointVerdict::Kind::kIntersecting:
      return "intersecting";
    case DisjointVerdict::Kind::kApproximate:
      return "approximate";
  }
  return "?";
}

std::string to_string(ContainmentVerdict::Kind kind) {
  switch (kind) {
    case ContainmentVerdict::Kind::kContained:
      return "contained";
    case ContainmentVerdict::Kind::kNotContained:
      return "not-contained";
    case ContainmentVerdict::Kind::kApproximate:
      return "approximate";
  }
  return "?";
}

}  // namespace twinbench
