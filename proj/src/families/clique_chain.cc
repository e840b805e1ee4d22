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

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "coord_map.h"
#include "twinbench/families.h"

namespace twinbench {
namespace {

constexpr std::size_t kCatalogueSize = 32;
constexpr std::size_t kCliqueChainMaxIndex = std::size_t{1} << 20;

SubgraphSpec row(Coord m) {
  return SubgraphSpec::coord_set("k", {AnyCoord{}, EqualTo{m}});
}

SubgraphSpec everything() {
  return SubgraphSpec::coord_set("k", {AnyCoord{}, AnyCoord{}});
}

MapPtr k_map(std::string name, GraphPtr target, std::size_t position,
             internal::CoordBijection bijection, SubgraphSpec support) {
  const GraphPtr g = clique_chain_graph();
  return internal::coordinate_map(internal::CoordMapSpec{
      .name = std::move(name),
      .source = g,
      .target = target ? std::move(target) : g,
      .tag = "k",
      .position = position,
      .bijection = std::move(bijection),
      .support = std::move(support),
      .domain = {AnyCoord{}, AnyCoord{}},
  });
}

MapPtr row_shift(std::string name, Coord from) {
  return k_map(std::move(name), remove(clique_chain_graph(), row(from)), 1,
               internal::index_shift(from),
               SubgraphSpec::coord_set("k", {AnyCoord{}, InRange{from}}));
}

}  // namespace

MapPtr clique_chain_shift() { return row_shift("f", 1); }

MapPtr clique_chain_shift_from(std::size_t from) {
  if (from == 0) throw std::invalid_argument("rows start at 1");
  return row_shift("shift" + std::to_string(from), from);
}

AlternatingFamily clique_chain_family() {
  struct Cache {
    std::mutex mu;
    std::map<std::size_t, MapPtr> alts;
  };
  auto cache = std::make_shared<Cache>();
  AlternatingFamily fam;
  fam.name = "clique-chain rows";
  fam.graph = clique_chain_graph();
  fam.copy = [](std::size_t i) { return row(i + 1); };
  fam.alt = [cache](std::size_t i) -> MapPtr {
    std::lock_guard<std::mutex> lock(cache->mu);
    if (auto it = cache->alts.find(i); it != cache->alts.end()) {
      return it->second;
    }
    const MapPtr m =
        i == 0 ? identity_map(clique_chain_graph())
               : k_map("alpha" + std::to_string(i), nullptr, 1,
                       internal::transposition(1, i + 1),
                       SubgraphSpec::union_of({row(1), row(i + 1)}));
    return cache->alts.emplace(i, m).first->second;
  };
  fam.locate = [](const VertexId& v) -> std::optional<std::size_t> {
    if (v.tag != "k" || v.coords.size() != 2) return std::nullopt;
    return v.coords[1] - 1;
  };
  fam.support = everything();
  fam.max_index = kCliqueChainMaxIndex;
  return fam;
}

FamilyBundle clique_chain() {
  FamilyBundle b;
  b.name = "clique-chain";
  b.graph = clique_chain_graph();
  const MapPtr f = clique_chain_shift();
  const SubgraphSpec h = row(1);
  const SubgraphSpec p =
      SubgraphSpec::coord_set("k", {InRange{2}, EqualTo{1}});
  const RemovableWitness rem_h = make_removable_witness("H", b.graph, h, f);
  b.alt = clique_chain_family();
  const MapPtr alpha = beta(*b.alt, 0, 1);
  const MapPtr g = compose(alpha, compose(rem_h.map, alpha));
  b.rem.push_back(rem_h);
  b.rem.push_back(make_removable_witness(
      "reverse(H)", b.graph, SubgraphSpec::image(f, h), g));
  b.alternating.emplace("H", WellManneredWitness{rem_h, alpha});
  const MapPtr clique_swap =
      k_map("clique-swap", nullptr, 0, internal::transposition(1, 2),
            SubgraphSpec::coord_set("k", {make_in_set({1, 2}), AnyCoord{}}));
  b.alternating.emplace("H-clique-swap",
                        WellManneredWitness{rem_h, clique_swap});
  b.expected_failures.push_back("H-clique-swap");
  b.twin = make_twin_witness(rem_h, p, true);

  TorsionCatalogue cat;
  const GraphPtr g_minus_h = rem_h.map->target();
  for (std::size_t m = 1; m <= kCatalogueSize; ++m) {
    cat.rem_g.push_back(make_removable_witness(
        "shift-from-" + std::to_string(m), b.graph, row(m),
        clique_chain_shift_from(m)));
  }
  for (std::size_t m = 2; m <= kCatalogueSize + 1; ++m) {
    cat.rem_g_minus_h.push_back(make_removable_witness(
        "shift-from-" + std::to_string(m), g_minus_h, row(m),
        restrict_to(clique_chain_shift_from(m), g_minus_h)));
  }
  b.catalogue = std::move(cat);

  b.axioms.push_back("P = {k(j,1) : j >= 2} is not removable in G (declared)");
  b.axioms.push_back("Q = H \\ P = {k(1,1)} is finite, so the twin family is "
                     "ordinary");
  b.specs.emplace("H", h);
  b.specs.emplace("P", p);
  b.specs.emplace("Q", b.twin->q);
  b.specs.emplace("fH", SubgraphSpec::image(f, h));
  for (std::size_t i = 0; i <= 8; ++i) {
    b.specs.emplace("H" + std::to_string(i), b.alt->copy(i));
  }
  b.maps.emplace("f", f);
  b.maps.emplace("alpha", alpha);
  b.maps.emplace("g", g);
  b.maps.emplace("std", standard_isomorphism(*b.alt));
  b.maps.emplace("fstar", standard_isomorphism_fixing_first(*b.alt));
  b.maps.emplace("clique_swap", clique_swap);
  return b;
}

FamilyBundle ray() {
  FamilyBundle b;
  b.name = "ray";
  b.graph = ray_graph();
  const SubgraphSpec h = SubgraphSpec::finite({VertexId{"r", {1}}});
  const MapPtr f = internal::coordinate_map(internal::CoordMapSpec{
      .name = "f",
      .source = b.graph,
      .target = remove(b.graph, h),
      .tag = "r",
      .position = 0,
      .bijection = internal::index_shift(1),
      .support = SubgraphSpec::coord_set("r", {AnyCoord{}}),
      .domain = {AnyCoord{}},
  });
  b.rem.push_back(make_removable_witness("H", b.graph, h, f));
  b.specs.emplace("H", h);
  b.maps.emplace("f", f);
  return b;
}

}  // namespace twinbench
