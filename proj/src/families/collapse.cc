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

#include <stdexcept>
#include <string>

#include "twinbench/families.h"
#include "twinbench/number_theory.h"

namespace twinbench {
namespace {

// In G_k the half columns (a(2,j) removed) are the powers of p_1, ..., p_k.
struct ColumnClasses {
  std::size_t k;

  bool half(Coord j) const {
    const auto d = prime_power_decompose(j);
    if (!d) return false;
    const auto n = prime_index(d->prime);
    return n && *n <= k;
  }

  // Half columns <= j.
  Coord halves_upto(Coord j) const {
    Coord total = 0;
    for (std::size_t t = 1; t <= k; ++t) {
      const std::uint64_t p = nth_prime(t);
      if (j < p) break;
      total += floor_log(j, p);
    }
    return total;
  }

  Coord full_rank(Coord j) const { return j - halves_upto(j); }
  Coord half_rank(Coord j) const { return halves_upto(j); }

  // Smallest j with rank(j) >= r; rank is nondecreasing in j.
  template <typename Rank>
  static Coord unrank(Coord r, Coord hi, Rank rank) {
    Coord lo = 1;
    if (rank(hi) < r) throw std::overflow_error("column rank out of range");
    while (lo < hi) {
      const Coord mid = lo + (hi - lo) / 2;
      if (rank(mid) >= r) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }

  Coord full_unrank(Coord r) const {
    return unrank(r, kUnbounded - 1,
                  [this](Coord j) { return full_rank(j); });
  }
  Coord half_unrank(Coord r) const {
    return unrank(r, kUnbounded - 1,
                  [this](Coord j) { return half_rank(j); });
  }
};

}  // namespace

MapPtr collapse_iso_extended_star(std::size_t k) {
  if (k < 2 || k > 16) {
    throw std::out_of_range("collapse is provided for 2 <= k <= 16");
  }
  const FamilyBundle& b = family_bundle("extended-star");
  const GraphPtr gk = twin_family(*b.twin, k).graph;
  const GraphPtr g1 = twin_family(*b.twin, 1).graph;
  const ColumnClasses from{k};
  const ColumnClasses to{1};
  MapParts parts;
  parts.name = "collapse" + std::to_string(k);
  parts.source = gk;
  parts.target = g1;
  parts.forward = [from, to](const VertexId& v) {
    if (v.tag != "a") return v;
    const Coord j = v.coords[1];
    if (from.half(j)) {
      const auto c = checked_pow(2, static_cast<unsigned>(from.half_rank(j)));
      if (!c) throw std::overflow_error("half column rank exceeds 63");
      return VertexId{"a", {v.coords[0], *c}};
    }
    return VertexId{"a", {v.coords[0], to.full_unrank(from.full_rank(j))}};
  };
  parts.backward = [from, to](const VertexId& w) -> std::optional<VertexId> {
    if (w.tag != "a") return w;
    const Coord j = w.coords[1];
    if (to.half(j)) {
      return VertexId{"a", {w.coords[0], from.half_unrank(to.half_rank(j))}};
    }
    return VertexId{"a", {w.coords[0], from.full_unrank(to.full_rank(j))}};
  };
  parts.support = SubgraphSpec::coord_set(
      "a", {make_in_set({1, 2}), AnyCoord{}});
  return make_map(std::move(parts));
}

}  // namespace twinbench
