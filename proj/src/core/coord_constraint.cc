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

#include "twinbench/coord_constraint.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twinbench/number_theory.h"

namespace twinbench {
namespace {

constexpr std::size_t kLeapfrogCap = 1'000'000;
constexpr std::size_t kMaxGapPieces = 4096;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::optional<std::uint64_t> safe_nth_prime(std::size_t n) {
  try {
    return nth_prime(n);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

// Index of the prime root of a power, when the root is a prime in the table.
std::optional<std::size_t> prime_root_index(Coord base) {
  const PowerRoot root = perfect_power_root(base);
  if (!is_prime(root.root)) return std::nullopt;
  return prime_index(root.root);
}

// Treats Any and InRange uniformly as an interval.
std::optional<InRange> as_interval(const CoordConstraint& c) {
  if (std::holds_alternative<AnyCoord>(c)) return InRange{1, kUnbounded};
  if (std::holds_alternative<InRange>(c)) return std::get<InRange>(c);
  return std::nullopt;
}

CoordConstraint canonical(const CoordConstraint& c) {
  if (const auto* r = std::get_if<InRange>(&c)) {
    if (r->lo > r->hi) return InSet{};
    if (r->lo <= 1 && r->hi == kUnbounded) return AnyCoord{};
    if (r->lo == r->hi) return EqualTo{r->lo};
  }
  if (const auto* s = std::get_if<InSet>(&c)) {
    if (s->values.size() == 1) return EqualTo{s->values.front()};
  }
  if (const auto* p = std::get_if<NthPrimePowers>(&c)) {
    if (p->lo > p->hi) return InSet{};
  }
  return c;
}

std::optional<Coord> next_prime_power(const NthPrimePowers& c, Coord x) {
  if (c.lo > c.hi) return std::nullopt;
  std::optional<Coord> best;
  const auto consider = [&best](Coord v) {
    if (!best || v < *best) best = v;
  };
  const Coord root = integer_root(x, 2);
  for (std::size_t n = std::max<std::size_t>(c.lo, 1); n <= c.hi; ++n) {
    const auto p = safe_nth_prime(n);
    if (!p) break;
    if (*p >= x) {
      consider(*p);
      break;
    }
    if (*p > root) {
      // Every later prime below x first reaches x at its square; the first
      // prime >= x reaches it at its first power.
      if (const auto sq = checked_pow(*p, 2)) consider(*sq);
      if (const auto idx = prime_index_at_least(x)) {
        const std::size_t m = std::max(*idx, c.lo);
        if (m <= c.hi) {
          if (const auto q = safe_nth_prime(m)) consider(*q);
        }
      }
      break;
    }
    Coord acc = *p;
    bool overflow = false;
    while (acc < x) {
      if (acc > kUnbounded / *p) {
        overflow = true;
        break;
      }
      acc *= *p;
    }
    if (!overflow) consider(acc);
  }
  return best;
}

}  // namespace

InSet make_in_set(std::vector<Coord> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return InSet{std::move(values)};
}

bool coord_contains(const CoordConstraint& c, Coord x) {
  return std::visit(
      Overloaded{
          [](const AnyCoord&) { return true; },
          [x](const EqualTo& e) { return e.value == x; },
          [x](const InSet& s) {
            return std::binary_search(s.values.begin(), s.values.end(), x);
          },
          [x](const PowersOf& p) {
            if (p.base == 0) return false;
            if (p.base == 1) return x == 1;
            if (x < p.base) return false;
            Coord acc = p.base;
            while (acc < x) {
              if (acc > kUnbounded / p.base) return false;
              acc *= p.base;
            }
            return acc == x;
          },
          [x](const NthPrimePowers& p) {
            const auto pp = prime_power_decompose(x);
            if (!pp) return false;
            const auto idx = prime_index(pp->prime);
            return idx && *idx >= p.lo && *idx <= p.hi;
          },
          [x](const InRange& r) { return x >= r.lo && x <= r.hi; },
      },
      c);
}

bool coord_empty(const CoordConstraint& c) {
  return std::visit(
      Overloaded{
          [](const AnyCoord&) { return false; },
          [](const EqualTo&) { return false; },
          [](const InSet& s) { return s.values.empty(); },
          [](const PowersOf& p) { return p.base == 0; },
          [](const NthPrimePowers& p) {
            return p.lo > p.hi || p.hi == 0;
          },
          [](const InRange& r) { return r.lo > r.hi; },
      },
      c);
}

bool coord_is_finite(const CoordConstraint& c) {
  if (coord_empty(c)) return true;
  return std::visit(
      Overloaded{
          [](const AnyCoord&) { return false; },
          [](const EqualTo&) { return true; },
          [](const InSet&) { return true; },
          [](const PowersOf& p) { return p.base <= 1; },
          [](const NthPrimePowers&) { return false; },
          [](const InRange& r) { return r.hi != kUnbounded; },
      },
      c);
}

std::optional<std::vector<Coord>> coord_finite_values(const CoordConstraint& c,
                                                      std::size_t limit) {
  if (coord_empty(c)) return std::vector<Coord>{};
  if (!coord_is_finite(c)) return std::nullopt;
  return std::visit(
      Overloaded{
          [](const AnyCoord&) -> std::optional<std::vector<Coord>> {
            return std::nullopt;
          },
          [](const EqualTo& e) -> std::optional<std::vector<Coord>> {
            return std::vector<Coord>{e.value};
          },
          [](const InSet& s) -> std::optional<std::vector<Coord>> {
            return s.values;
          },
          [](const PowersOf&) -> std::optional<std::vector<Coord>> {
            return std::vector<Coord>{1};
          },
          [](const NthPrimePowers&) -> std::optional<std::vector<Coord>> {
            return std::nullopt;
          },
          [limit](const InRange& r) -> std::optional<std::vector<Coord>> {
            if (r.hi - r.lo >= limit) return std::nullopt;
            std::vector<Coord> out;
            for (Coord v = r.lo;; ++v) {
              out.push_back(v);
              if (v == r.hi) break;
            }
            return out;
          },
      },
      c);
}

std::optional<Coord> coord_next_at_least(const CoordConstraint& c, Coord x) {
  if (x == 0) x = 1;
  return std::visit(
      Overloaded{
          [x](const AnyCoord&) -> std::optional<Coord> { return x; },
          [x](const EqualTo& e) -> std::optional<Coord> {
            if (x <= e.value) return e.value;
            return std::nullopt;
          },
          [x](const InSet& s) -> std::optional<Coord> {
            const auto it =
                std::lower_bound(s.values.begin(), s.values.end(), x);
            if (it == s.values.end()) return std::nullopt;
            return *it;
          },
          [x](const PowersOf& p) -> std::optional<Coord> {
            if (p.base == 0) return std::nullopt;
            if (p.base == 1) {
              if (x <= 1) return Coord{1};
              return std::nullopt;
            }
            Coord acc = p.base;
            while (acc < x) {
              if (acc > kUnbounded / p.base) return std::nullopt;
              acc *= p.base;
            }
            return acc;
          },
          [x](const NthPrimePowers& p) { return next_prime_power(p, x); },
          [x](const InRange& r) -> std::optional<Coord> {
            const Coord v = std::max(x, r.lo);
            if (v > r.hi) return std::nullopt;
            return v;
          },
      },
      c);
}

bool coord_intersects(const CoordConstraint& a, const CoordConstraint& b) {
  if (coord_empty(a) || coord_empty(b)) return false;
  if (std::holds_alternative<AnyCoord>(a) ||
      std::holds_alternative<AnyCoord>(b)) {
    return true;
  }
  if (const auto fa = coord_finite_values(a)) {
    return std::any_of(fa->begin(), fa->end(),
                       [&b](Coord x) { return coord_contains(b, x); });
  }
  if (const auto fb = coord_finite_values(b)) {
    return std::any_of(fb->begin(), fb->end(),
                       [&a](Coord x) { return coord_contains(a, x); });
  }
  if (const auto* r = std::get_if<InRange>(&a)) {
    const auto n = coord_next_at_least(b, r->lo);
    return n && *n <= r->hi;
  }
  if (const auto* r = std::get_if<InRange>(&b)) {
    const auto n = coord_next_at_least(a, r->lo);
    return n && *n <= r->hi;
  }
  // Both are infinite PowersOf / NthPrimePowers sets.
  const auto* pa = std::get_if<PowersOf>(&a);
  const auto* pb = std::get_if<PowersOf>(&b);
  const auto* na = std::get_if<NthPrimePowers>(&a);
  const auto* nb = std::get_if<NthPrimePowers>(&b);
  if (pa && pb) {
    return perfect_power_root(pa->base).root ==
           perfect_power_root(pb->base).root;
  }
  if (na && nb) return std::max(na->lo, nb->lo) <= std::min(na->hi, nb->hi);
  const PowersOf& pw = pa ? *pa : *pb;
  const NthPrimePowers& np = na ? *na : *nb;
  const auto idx = prime_root_index(pw.base);
  return idx && *idx >= np.lo && *idx <= np.hi;
}

std::optional<Coord> coord_first_common(const CoordConstraint& a,
                                        const CoordConstraint& b) {
  if (!coord_intersects(a, b)) return std::nullopt;
  Coord x = 1;
  for (std::size_t iter = 0; iter < kLeapfrogCap; ++iter) {
    const auto ya = coord_next_at_least(a, x);
    if (!ya) return std::nullopt;
    const auto yb = coord_next_at_least(b, *ya);
    if (!yb) return std::nullopt;
    if (*yb == *ya) return *ya;
    x = *yb;
  }
  return std::nullopt;
}

bool coord_subset(const CoordConstraint& a, const CoordConstraint& b) {
  if (coord_empty(a)) return true;
  if (std::holds_alternative<AnyCoord>(b)) return true;
  if (const auto fa = coord_finite_values(a)) {
    return std::all_of(fa->begin(), fa->end(),
                       [&b](Coord x) { return coord_contains(b, x); });
  }
  if (const auto ia = as_interval(a)) {
    // Infinite ray or a bounded interval too long to enumerate; such an
    // interval always contains a non prime power, so only intervals fit.
    const auto ib = as_interval(b);
    return ib && ib->lo <= ia->lo && ib->hi >= ia->hi;
  }
  if (coord_is_finite(b)) return false;
  if (const auto* pa = std::get_if<PowersOf>(&a)) {
    if (const auto ib = as_interval(b)) {
      return pa->base >= ib->lo && ib->hi == kUnbounded;
    }
    if (const auto* pb = std::get_if<PowersOf>(&b)) {
      const PowerRoot ra = perfect_power_root(pa->base);
      const PowerRoot rb = perfect_power_root(pb->base);
      return ra.root == rb.root && ra.exponent % rb.exponent == 0;
    }
    const auto& nb = std::get<NthPrimePowers>(b);
    const auto idx = prime_root_index(pa->base);
    return idx && *idx >= nb.lo && *idx <= nb.hi;
  }
  const auto& na = std::get<NthPrimePowers>(a);
  if (const auto ib = as_interval(b)) {
    const auto first = safe_nth_prime(na.lo);
    return first && *first >= ib->lo && ib->hi == kUnbounded;
  }
  if (const auto* pb = std::get_if<PowersOf>(&b)) {
    return na.lo == na.hi && safe_nth_prime(na.lo) == pb->base;
  }
  const auto& nb = std::get<NthPrimePowers>(b);
  return nb.lo <= na.lo && na.hi <= nb.hi;
}

std::optional<CoordConstraint> coord_intersection(const CoordConstraint& a,
                                                  const CoordConstraint& b) {
  if (!coord_intersects(a, b)) return CoordConstraint{InSet{}};
  if (std::holds_alternative<AnyCoord>(a)) return canonical(b);
  if (std::holds_alternative<AnyCoord>(b)) return canonical(a);
  const auto filter = [](const std::vector<Coord>& values,
                         const CoordConstraint& other) -> CoordConstraint {
    std::vector<Coord> kept;
    for (Coord x : values) {
      if (coord_contains(other, x)) kept.push_back(x);
    }
    return canonical(InSet{std::move(kept)});
  };
  if (const auto fa = coord_finite_values(a)) return filter(*fa, b);
  if (const auto fb = coord_finite_values(b)) return filter(*fb, a);

  const auto* ra = std::get_if<InRange>(&a);
  const auto* rb = std::get_if<InRange>(&b);
  if (ra && rb) {
    return canonical(
        InRange{std::max(ra->lo, rb->lo), std::min(ra->hi, rb->hi)});
  }
  if (ra || rb) {
    const InRange& r = ra ? *ra : *rb;
    const CoordConstraint& other = ra ? b : a;
    if (r.hi != kUnbounded) {
      std::vector<Coord> kept;
      Coord x = r.lo;
      for (std::size_t i = 0; i < kLeapfrogCap; ++i) {
        const auto next = coord_next_at_least(other, x);
        if (!next || *next > r.hi) return canonical(InSet{std::move(kept)});
        kept.push_back(*next);
        if (*next == kUnbounded) return canonical(InSet{std::move(kept)});
        x = *next + 1;
      }
      return std::nullopt;
    }
    const auto smallest = coord_next_at_least(other, 1);
    if (smallest && *smallest >= r.lo) return canonical(other);
    return std::nullopt;
  }

  const auto* pa = std::get_if<PowersOf>(&a);
  const auto* pb = std::get_if<PowersOf>(&b);
  if (pa && pb) {
    const PowerRoot x = perfect_power_root(pa->base);
    const PowerRoot y = perfect_power_root(pb->base);
    const unsigned l = std::lcm(x.exponent, y.exponent);
    if (const auto base = checked_pow(x.root, l)) {
      return CoordConstraint{PowersOf{*base}};
    }
    return CoordConstraint{InSet{}};
  }
  if (pa) return CoordConstraint{*pa};
  if (pb) return CoordConstraint{*pb};
  const auto& na = std::get<NthPrimePowers>(a);
  const auto& nb = std::get<NthPrimePowers>(b);
  return canonical(NthPrimePowers{std::max(na.lo, nb.lo),
                                  std::min(na.hi, nb.hi)});
}

std::optional<std::vector<CoordConstraint>> coord_difference(
    const CoordConstraint& a, const CoordConstraint& b) {
  using Pieces = std::vector<CoordConstraint>;
  if (coord_empty(a)) return Pieces{};
  if (!coord_intersects(a, b)) return Pieces{canonical(a)};
  if (coord_subset(a, b)) return Pieces{};
  if (const auto fa = coord_finite_values(a)) {
    std::vector<Coord> kept;
    for (Coord x : *fa) {
      if (!coord_contains(b, x)) kept.push_back(x);
    }
    return Pieces{canonical(InSet{std::move(kept)})};
  }

  Pieces out;
  const auto push = [&out](const CoordConstraint& c) {
    if (!coord_empty(c)) out.push_back(canonical(c));
  };

  if (const auto ia = as_interval(a)) {
    if (const auto ib = as_interval(b)) {
      if (ib->lo > ia->lo) push(InRange{ia->lo, ib->lo - 1});
      if (ib->hi < ia->hi) push(InRange{ib->hi + 1, ia->hi});
      return out;
    }
    const auto fb = coord_finite_values(b, kMaxGapPieces);
    if (!fb) return std::nullopt;
    Coord start = ia->lo;
    for (Coord x : *fb) {
      if (x < ia->lo || x > ia->hi) continue;
      if (x > start) push(InRange{start, x - 1});
      if (x == kUnbounded) return out;
      start = x + 1;
    }
    if (start <= ia->hi) push(InRange{start, ia->hi});
    return out;
  }

  if (const auto* na = std::get_if<NthPrimePowers>(&a)) {
    if (const auto* nb = std::get_if<NthPrimePowers>(&b)) {
      if (nb->lo > na->lo) push(NthPrimePowers{na->lo, nb->lo - 1});
      if (nb->hi < na->hi) push(NthPrimePowers{nb->hi + 1, na->hi});
      return out;
    }
    if (const auto* pb = std::get_if<PowersOf>(&b)) {
      if (!is_prime(pb->base)) return std::nullopt;
      const auto idx = prime_index(pb->base);
      if (!idx) return std::nullopt;
      if (*idx > na->lo) push(NthPrimePowers{na->lo, *idx - 1});
      if (*idx < na->hi) push(NthPrimePowers{*idx + 1, na->hi});
      return out;
    }
  }
  return std::nullopt;
}

std::string to_string(const CoordConstraint& c) {
  const auto bound = [](Coord v) {
    return v == kUnbounded ? std::string() : std::to_string(v);
  };
  return std::visit(
      Overloaded{
          [](const AnyCoord&) { return std::string("*"); },
          [](const EqualTo& e) { return "=" + std::to_string(e.value); },
          [](const InSet& s) {
            std::string out = "{";
            for (std::size_t i = 0; i < s.values.size(); ++i) {
              if (i > 0) out += ',';
              out += std::to_string(s.values[i]);
            }
            return out + "}";
          },
          [](const PowersOf& p) {
            return "pow(" + std::to_string(p.base) + ")";
          },
          [&bound](const NthPrimePowers& p) {
            return "pp(" + std::to_string(p.lo) + ".." + bound(p.hi) + ")";
          },
          [&bound](const InRange& r) {
            return "[" + std::to_string(r.lo) + ".." + bound(r.hi) + "]";
          },
      },
      c);
}

}  // namespace twinbench
