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
#include "twinbench/number_theory.h"

namespace twinbench {
namespace {

using internal::CoordBijection;
using internal::pointwise;

constexpr std::size_t kCatalogueSize = 32;
constexpr std::size_t kExtendedStarMaxIndex = 1'000;

std::size_t index_of_prime(std::uint64_t p) {
  const auto n = prime_index(p);
  if (!n) {
    throw std::out_of_range("prime " + std::to_string(p) +
                            " lies beyond the prime table");
  }
  return *n;
}

Coord prime_power(std::size_t n, unsigned e) {
  const auto v = checked_pow(nth_prime(n), e);
  if (!v) throw std::overflow_error("prime power exceeds 64 bits");
  return *v;
}

// (prime index, exponent) of a prime power, nullopt otherwise.
std::optional<std::pair<std::size_t, unsigned>> column_type(Coord j) {
  const auto d = prime_power_decompose(j);
  if (!d) return std::nullopt;
  return std::make_pair(index_of_prime(d->prime), d->exponent);
}

// Like column_type for the base of a PowersOf constraint.
std::optional<std::pair<std::size_t, unsigned>> base_type(Coord b) {
  const PowerRoot r = perfect_power_root(b);
  if (r.root < 2 || !is_prime(r.root)) return std::nullopt;
  return std::make_pair(index_of_prime(r.root), r.exponent);
}

// Relabels prime indices by `step`; nullopt from `step` leaves no preimage.
using IndexMove = std::function<std::optional<std::size_t>(std::size_t)>;

std::optional<Coord> relabel(Coord j, const IndexMove& step) {
  const auto t = column_type(j);
  if (!t) return j;
  const auto n = step(t->first);
  if (!n) return std::nullopt;
  if (*n == t->first) return j;
  return prime_power(*n, t->second);
}

std::optional<std::vector<CoordConstraint>> relabel_powers(
    const PowersOf& p, const IndexMove& step) {
  const auto t = base_type(p.base);
  if (!t) return std::vector<CoordConstraint>{p};
  const auto n = step(t->first);
  if (!n) return std::vector<CoordConstraint>{};
  const auto base = checked_pow(nth_prime(*n), t->second);
  if (!base) return std::nullopt;
  return std::vector<CoordConstraint>{PowersOf{*base}};
}

CoordBijection prime_shift(std::size_t from) {
  const IndexMove up = [from](std::size_t n) -> std::optional<std::size_t> {
    return n < from ? n : n + 1;
  };
  const IndexMove down = [from](std::size_t n) -> std::optional<std::size_t> {
    if (n < from) return n;
    if (n == from) return std::nullopt;
    return n - 1;
  };
  CoordBijection b;
  b.forward = [up](Coord j) { return *relabel(j, up); };
  b.backward = [down](Coord j) { return relabel(j, down); };
  b.forward_set = [from, up](const CoordConstraint& c)
      -> std::optional<std::vector<CoordConstraint>> {
    try {
      if (auto pts = pointwise(c, [&up](Coord x) { return relabel(x, up); })) {
        return pts;
      }
      if (const auto* p = std::get_if<PowersOf>(&c)) {
        return relabel_powers(*p, up);
      }
      if (const auto* np = std::get_if<NthPrimePowers>(&c)) {
        std::vector<CoordConstraint> out;
        if (np->lo < from) {
          out.push_back(NthPrimePowers{np->lo, std::min(np->hi, from - 1)});
        }
        if (np->hi >= from) {
          out.push_back(NthPrimePowers{
              std::max(np->lo, from) + 1,
              np->hi == kUnbounded ? kUnbounded : np->hi + 1});
        }
        return out;
      }
    } catch (const std::overflow_error&) {
    }
    return std::nullopt;
  };
  b.backward_set = [from, down](const CoordConstraint& c)
      -> std::optional<std::vector<CoordConstraint>> {
    try {
      if (auto pts = pointwise(c, [&down](Coord x) { return relabel(x, down); })) {
        return pts;
      }
      if (const auto* p = std::get_if<PowersOf>(&c)) {
        return relabel_powers(*p, down);
      }
      if (const auto* np = std::get_if<NthPrimePowers>(&c)) {
        std::vector<CoordConstraint> out;
        if (np->lo < from) {
          out.push_back(NthPrimePowers{np->lo, std::min(np->hi, from - 1)});
        }
        if (np->hi > from) {
          out.push_back(NthPrimePowers{
              std::max(np->lo, from + 1) - 1,
              np->hi == kUnbounded ? kUnbounded : np->hi - 1});
        }
        return out;
      }
    } catch (const std::overflow_error&) {
    }
    return std::nullopt;
  };
  return b;
}

// Exchanges the prime-power columns of p_a and p_b exponent by exponent.
CoordBijection prime_swap(std::size_t a, std::size_t b) {
  const IndexMove swap = [a, b](std::size_t n) -> std::optional<std::size_t> {
    return n == a ? b : n == b ? a : n;
  };
  CoordBijection t;
  t.forward = [swap](Coord j) { return *relabel(j, swap); };
  t.backward = [swap](Coord j) { return relabel(j, swap); };
  t.forward_set = [a, b, swap](const CoordConstraint& c)
      -> std::optional<std::vector<CoordConstraint>> {
    try {
      if (auto pts = pointwise(c, [&swap](Coord x) { return relabel(x, swap); })) {
        return pts;
      }
      if (std::holds_alternative<AnyCoord>(c)) {
        return std::vector<CoordConstraint>{c};
      }
      if (const auto* p = std::get_if<PowersOf>(&c)) {
        return relabel_powers(*p, swap);
      }
      if (const auto* np = std::get_if<NthPrimePowers>(&c)) {
        const bool has_a = np->lo <= a && a <= np->hi;
        const bool has_b = np->lo <= b && b <= np->hi;
        if (has_a == has_b) return std::vector<CoordConstraint>{c};
      }
    } catch (const std::overflow_error&) {
    }
    return std::nullopt;
  };
  t.backward_set = t.forward_set;
  return t;
}

std::vector<CoordConstraint> a_domain() {
  return {make_in_set({1, 2}), AnyCoord{}};
}

SubgraphSpec columns(CoordConstraint c) {
  return SubgraphSpec::coord_set("a", {make_in_set({1, 2}), std::move(c)});
}

SubgraphSpec prime_columns(std::size_t n) {
  return columns(NthPrimePowers{n, n});
}

MapPtr shift_map(std::string name, std::size_t from, GraphPtr target) {
  return internal::coordinate_map(internal::CoordMapSpec{
      .name = std::move(name),
      .source = extended_star_graph(),
      .target = std::move(target),
      .tag = "a",
      .position = 1,
      .bijection = prime_shift(from),
      .support = columns(NthPrimePowers{from, kUnbounded}),
      .domain = a_domain(),
  });
}

}  // namespace

MapPtr extended_star_shift() {
  return shift_map("f", 1,
                   remove(extended_star_graph(), columns(PowersOf{2})));
}

MapPtr extended_star_shift_from(std::size_t from) {
  if (from == 0) throw std::invalid_argument("prime indices start at 1");
  return shift_map("shift" + std::to_string(from), from,
                   remove(extended_star_graph(), prime_columns(from)));
}

AlternatingFamily extended_star_family() {
  struct Cache {
    std::mutex mu;
    std::map<std::size_t, MapPtr> alts;
  };
  auto cache = std::make_shared<Cache>();
  const GraphPtr g = extended_star_graph();
  AlternatingFamily fam;
  fam.name = "extended-star columns";
  fam.graph = g;
  fam.copy = [](std::size_t i) { return columns(PowersOf{nth_prime(i + 1)}); };
  fam.alt = [cache, g](std::size_t i) -> MapPtr {
    std::lock_guard<std::mutex> lock(cache->mu);
    if (auto it = cache->alts.find(i); it != cache->alts.end()) {
      return it->second;
    }
    MapPtr m;
    if (i == 0) {
      m = identity_map(g);
    } else {
      m = internal::coordinate_map(internal::CoordMapSpec{
          .name = "alpha" + std::to_string(i),
          .source = g,
          .target = g,
          .tag = "a",
          .position = 1,
          .bijection = prime_swap(1, i + 1),
          .support = SubgraphSpec::union_of(
              {columns(PowersOf{2}), columns(PowersOf{nth_prime(i + 1)})}),
          .domain = a_domain(),
      });
    }
    return cache->alts.emplace(i, m).first->second;
  };
  fam.locate = [](const VertexId& v) -> std::optional<std::size_t> {
    if (v.tag != "a" || v.coords.size() != 2) return std::nullopt;
    const auto d = prime_power_decompose(v.coords[1]);
    if (!d) return std::nullopt;
    return index_of_prime(d->prime) - 1;
  };
  fam.support = columns(NthPrimePowers{1, kUnbounded});
  fam.max_index = kExtendedStarMaxIndex;
  return fam;
}

FamilyBundle extended_star() {
  FamilyBundle b;
  b.name = "extended-star";
  b.graph = extended_star_graph();
  const MapPtr f = extended_star_shift();
  const SubgraphSpec h = columns(PowersOf{2});
  const SubgraphSpec p =
      SubgraphSpec::coord_set("a", {EqualTo{2}, PowersOf{2}});
  const RemovableWitness rem_h = make_removable_witness("H", b.graph, h, f);
  b.alt = extended_star_family();
  const MapPtr alpha = beta(*b.alt, 0, 1);
  const MapPtr g = compose(alpha, compose(rem_h.map, alpha));
  b.rem.push_back(rem_h);
  b.rem.push_back(make_removable_witness(
      "reverse(H)", b.graph, SubgraphSpec::image(f, h), g));
  b.alternating.emplace("H", WellManneredWitness{rem_h, alpha});
  b.alternating.emplace("H-identity",
                        WellManneredWitness{rem_h, identity_map(b.graph)});
  b.expected_failures.push_back("H-identity");
  b.twin = make_twin_witness(rem_h, p, true);

  TorsionCatalogue cat;
  const GraphPtr g_minus_h = rem_h.map->target();
  for (std::size_t n = 1; n <= kCatalogueSize; ++n) {
    cat.rem_g.push_back(make_removable_witness(
        "shift-from-" + std::to_string(n), b.graph, prime_columns(n),
        extended_star_shift_from(n)));
  }
  for (std::size_t n = 2; n <= kCatalogueSize + 1; ++n) {
    cat.rem_g_minus_h.push_back(make_removable_witness(
        "shift-from-" + std::to_string(n), g_minus_h, prime_columns(n),
        restrict_to(extended_star_shift_from(n), g_minus_h)));
  }
  b.catalogue = std::move(cat);

  b.axioms.push_back("P = {a(2,2^j)} is not removable in G (declared)");
  b.axioms.push_back("Q = H \\ P is infinite, so the twin family is not "
                     "ordinary and G_k is isomorphic to G_1 for all k");
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
  return b;
}

}  // namespace twinbench
