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

// Maps that act on one coordinate of one tag and fix everything else. Shared
// by the built-in families.

#ifndef TWINBENCH_FAMILIES_COORD_MAP_H_
#define TWINBENCH_FAMILIES_COORD_MAP_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twinbench/coord_constraint.h"
#include "twinbench/vertex_map.h"

namespace twinbench::internal {

using ConstraintImage =
    std::optional<std::vector<CoordConstraint>>(const CoordConstraint&);

// An injection on positive integers with its partial inverse and symbolic
// images of constraints (nullopt: no exact representation).
struct CoordBijection {
  std::function<Coord(Coord)> forward;
  std::function<std::optional<Coord>(Coord)> backward;
  std::function<ConstraintImage> forward_set;
  std::function<ConstraintImage> backward_set;
};

struct CoordMapSpec {
  std::string name;
  GraphPtr source;
  GraphPtr target;
  std::string tag;
  std::size_t position = 0;
  CoordBijection bijection;
  SubgraphSpec support;
  // Per-coordinate domain of `tag` in the source; boxes are clipped to it.
  std::vector<CoordConstraint> domain;
};

MapPtr coordinate_map(CoordMapSpec spec);

// m -> m + 1 for m >= from, identity below.
CoordBijection index_shift(Coord from);
// a <-> b, identity elsewhere.
CoordBijection transposition(Coord a, Coord b);

// Pointwise image of EqualTo / InSet constraints; nullopt for other forms.
std::optional<std::vector<CoordConstraint>> pointwise(
    const CoordConstraint& c, const std::function<std::optional<Coord>(Coord)>& f);

}  // namespace twinbench::internal

#endif  // TWINBENCH_FAMILIES_COORD_MAP_H_
