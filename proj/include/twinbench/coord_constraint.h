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

// Sets of positive integers used as per-coordinate constraints of symbolic
// vertex sets, together with the exact algebra (intersection test, subset
// test, representable intersection and difference) the subgraph layer
// builds on.

#ifndef TWINBENCH_COORD_CONSTRAINT_H_
#define TWINBENCH_COORD_CONSTRAINT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twinbench/vertex.h"

namespace twinbench {

struct AnyCoord {
  friend bool operator==(const AnyCoord&, const AnyCoord&) = default;
};

struct EqualTo {
  Coord value = 1;
  friend bool operator==(const EqualTo&, const EqualTo&) = default;
};

// Sorted, duplicate free.
struct InSet {
  std::vector<Coord> values;
  friend bool operator==(const InSet&, const InSet&) = default;
};

// {base^j : j >= 1}.
struct PowersOf {
  Coord base = 2;
  friend bool operator==(const PowersOf&, const PowersOf&) = default;
};

// {p_n^j : j >= 1, lo <= n <= hi} where p_n is the n-th prime (p_1 = 2).
// hi == kUnbounded leaves the index range open.
struct NthPrimePowers {
  std::size_t lo = 1;
  std::size_t hi = kUnbounded;
  friend bool operator==(const NthPrimePowers&,
                         const NthPrimePowers&) = default;
};

// [lo, hi]; hi == kUnbounded is an open ray.
struct InRange {
  Coord lo = 1;
  Coord hi = kUnbounded;
  friend bool operator==(const InRange&, const InRange&) = default;
};

using CoordConstraint =
    std::variant<AnyCoord, EqualTo, InSet, PowersOf, NthPrimePowers, InRange>;

InSet make_in_set(std::vector<Coord> values);

bool coord_contains(const CoordConstraint& c, Coord x);
bool coord_empty(const CoordConstraint& c);

// All members in ascending order when the set is finite and has at most
// `limit` members.
std::optional<std::vector<Coord>> coord_finite_values(
    const CoordConstraint& c, std::size_t limit = 1'000'000);
bool coord_is_finite(const CoordConstraint& c);

// Smallest member >= x.
std::optional<Coord> coord_next_at_least(const CoordConstraint& c, Coord x);

bool coord_intersects(const CoordConstraint& a, const CoordConstraint& b);
std::optional<Coord> coord_first_common(const CoordConstraint& a,
                                        const CoordConstraint& b);
bool coord_subset(const CoordConstraint& a, const CoordConstraint& b);

// nullopt when a ∩ b has no single-constraint representation.
std::optional<CoordConstraint> coord_intersection(const CoordConstraint& a,
                                                  const CoordConstraint& b);
// a \ b as a union of constraints, or nullopt when not representable.
std::optional<std::vector<CoordConstraint>> coord_difference(
    const CoordConstraint& a, const CoordConstraint& b);

std::string to_string(const CoordConstraint& c);

}  // namespace twinbench

#endif  // TWINBENCH_COORD_CONSTRAINT_H_
