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

#ifndef TWINBENCH_SELFCONTAIN_H_
#define TWINBENCH_SELFCONTAIN_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twinbench/graph.h"
#include "twinbench/subgraph.h"
#include "twinbench/verify.h"
#include "twinbench/vertex_map.h"

namespace twinbench {

inline constexpr std::size_t kVerifyWindow = 500;
inline constexpr std::size_t kTorsionWindow = 200;

// H together with a claimed isomorphism f : G -> G \ H. Removability is only
// ever asserted relative to such a witness.
struct RemovableWitness {
  std::string name;
  GraphPtr graph;
  SubgraphSpec removed;
  MapPtr map;  // target is remove(graph, removed)
};

// Builds a witness, re-targeting `map` onto remove(graph, removed).
RemovableWitness make_removable_witness(std::string name, GraphPtr graph,
                                        SubgraphSpec removed, MapPtr map);

// verify_iso_window(f, G, G \ H, n) plus disjointness of f(H) and H.
VerificationReport verify_removable(const RemovableWitness& w,
                                    std::size_t n = kVerifyWindow);

// Pairwise disjoint copies H_0, H_1, ... with automorphisms alt(i) swapping
// H_0 and H_i and fixing everything else; alt(0) is the identity.
struct AlternatingFamily {
  std::string name;
  GraphPtr graph;
  std::function<SubgraphSpec(std::size_t)> copy;
  std::function<MapPtr(std::size_t)> alt;
  // The index i with v in H_i, or nullopt when v is in no copy.
  std::function<std::optional<std::size_t>(const VertexId&)> locate;
  // Contains every copy; maps built from the family are the identity
  // outside it.
  SubgraphSpec support;
  std::size_t max_index = 64;
};

// Copies 0..limit-1 checked pairwise with spec_disjoint; throws WitnessError
// with a shared vertex on overlap.
void check_copies_disjoint(const AlternatingFamily& fam,
                           std::size_t limit = 16);

// H_i -> H_{i+1} via alt(i+1) ∘ alt(i), identity elsewhere; a map
// G -> G \ H_0.
MapPtr standard_isomorphism(const AlternatingFamily& fam);

// H_0 -> H_2, H_j -> H_{j+1} for j >= 2, H_1 fixed pointwise.
MapPtr standard_isomorphism_fixing_first(const AlternatingFamily& fam);

// Swaps H_i and H_j: alt(i) ∘ alt(j) on H_j, alt(j) ∘ alt(i) on H_i.
// Throws std::invalid_argument for i == j or indices past max_index.
MapPtr beta(const AlternatingFamily& fam, std::size_t i, std::size_t j);

// A removable witness (H, f) with alpha swapping H and f(H).
struct WellManneredWitness {
  RemovableWitness base;
  MapPtr alpha;
};

// alpha is an automorphism; alpha(H) = f(H) and alpha^2(H) = H on the window;
// alpha fixes window vertices outside H ∪ f(H).
VerificationReport verify_alternating(const WellManneredWitness& w,
                                      std::size_t n = kVerifyWindow);

// f(H) with g = alpha ∘ f ∘ alpha : G -> G \ f(H). Throws WitnessError when
// verify_alternating fails at `n`.
RemovableWitness reverse_witness(const WellManneredWitness& w,
                                 std::size_t n = kVerifyWindow);
// The reverse witness paired with the same alpha, so it can be reversed
// again.
WellManneredWitness reverse_well_mannered(const WellManneredWitness& w,
                                          std::size_t n = kVerifyWindow);

// Image(f^j, H) for j < k (k <= 64), checked pairwise disjoint.
std::vector<SubgraphSpec> disjoint_copies(const RemovableWitness& w,
                                          std::size_t k);

// Witness for P ∪ Q from a witness for P on G and one for Q on G \ P, with
// map fQ ∘ fP. Returns wP when Q is empty.
RemovableWitness compose_removable(const RemovableWitness& wp,
                                   const RemovableWitness& wq);

// Removable witnesses on G and on G \ H for a fixed H.
struct TorsionCatalogue {
  std::vector<RemovableWitness> rem_g;
  std::vector<RemovableWitness> rem_g_minus_h;
};

enum class Twist { kTwisted, kNotTwisted, kUnknown };
std::string to_string(Twist t);

// Catalogue-relative: kUnknown when no catalogued P contains v; kTwisted
// when some does but no catalogued Q over G \ H contains v. Vertices of H are
// first transported into G \ H through f.
Twist is_twisted_vertex(const VertexId& v, const RemovableWitness& h,
                        const TorsionCatalogue& cat);

// The twisted vertices among the first n of G.
SubgraphSpec torsion(const RemovableWitness& h, const TorsionCatalogue& cat,
                     std::size_t n = kTorsionWindow);

}  // namespace twinbench

#endif  // TWINBENCH_SELFCONTAIN_H_
