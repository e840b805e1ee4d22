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

#ifndef TWINBENCH_FAMILIES_H_
#define TWINBENCH_FAMILIES_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twinbench/graph.h"
#include "twinbench/selfcontain.h"
#include "twinbench/subgraph.h"
#include "twinbench/twins.h"
#include "twinbench/vertex_map.h"

namespace twinbench {

// A built-in family with everything the workbench knows about it. Axioms are
// declared statements surfaced in reports and never used as proof.
struct FamilyBundle {
  std::string name;
  GraphPtr graph;
  std::vector<RemovableWitness> rem;
  std::optional<AlternatingFamily> alt;
  std::optional<TwinWitness> twin;
  // Well-mannered witnesses by name; negative controls are included and
  // expected to fail verify_alternating.
  std::map<std::string, WellManneredWitness> alternating;
  std::vector<std::string> expected_failures;
  std::optional<TorsionCatalogue> catalogue;
  std::vector<std::string> axioms;
  std::map<std::string, SubgraphSpec> specs;
  std::map<std::string, MapPtr> maps;
};

// o adjacent to a(1,j); a(1,j) adjacent to a(2,j). Enumerated o, a(1,1),
// a(2,1), a(1,2), ...
GraphPtr extended_star_graph();
// o adjacent to k(1,m); k(j,m) ~ k(j,m') for m != m'; k(j,m) ~ k(j±1,m).
// Enumerated o, then diagonals j+m = 2, 3, ... with j ascending.
GraphPtr clique_chain_graph();
// r(n) ~ r(n+1).
GraphPtr ray_graph();

// a(x, p_n^k) -> a(x, p_{n+1}^k); fixes o and non prime powers.
MapPtr extended_star_shift();
// Shift of prime-power columns whose prime index is at least `from`.
MapPtr extended_star_shift_from(std::size_t from);
// k(j,m) -> k(j,m+1).
MapPtr clique_chain_shift();
// Shift of rows m >= from.
MapPtr clique_chain_shift_from(std::size_t from);

AlternatingFamily extended_star_family();
AlternatingFamily clique_chain_family();

FamilyBundle extended_star();
FamilyBundle clique_chain();
FamilyBundle ray();

// Explicit isomorphism G_k -> G_1 of the extended-star twin family, matching
// half columns (only a(1,j) left) and full columns in ascending order.
// 2 <= k <= 16.
MapPtr collapse_iso_extended_star(std::size_t k);

// Registered bundles, built once.
const std::vector<std::string>& family_names();
const FamilyBundle& family_bundle(const std::string& name);

}  // namespace twinbench

#endif  // TWINBENCH_FAMILIES_H_
