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

#ifndef TWINBENCH_TWINS_H_
#define TWINBENCH_TWINS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twinbench/graph.h"
#include "twinbench/selfcontain.h"
#include "twinbench/subgraph.h"
#include "twinbench/verify.h"
#include "twinbench/vertex_map.h"
#include "twinbench/window.h"

namespace twinbench {

inline constexpr std::size_t kMaxTwinIndex = 64;
inline constexpr std::size_t kEmbeddingWindow = 300;

// Q = H \ P is finite and nonempty.
struct OrdinaryTag {
  std::vector<VertexId> q;
};

// P ⊂ H with H removable via `base`. `declared_nonremovable` records the
// family-level assertion that P itself has no witness; it is metadata only.
struct TwinWitness {
  RemovableWitness base;
  SubgraphSpec p;
  SubgraphSpec q;
  bool declared_nonremovable = false;
  std::optional<OrdinaryTag> ordinary;
};

// Checks P nonempty and P ⊆ H (WitnessError otherwise) and derives Q and the
// ordinary tag.
TwinWitness make_twin_witness(RemovableWitness base, SubgraphSpec p,
                              bool declared_nonremovable);

struct StrongTwin {
  GraphPtr graph;     // G_1 = G \ P
  MapPtr embed_up;    // inclusion G_1 -> G
  MapPtr embed_down;  // f : G -> G \ H ⊆ G_1
};
StrongTwin strong_twin(const TwinWitness& tw);

// G_i = G \ (P ∪ f(P) ∪ ... ∪ f^{i-1}(P)).
struct TwinFamilyEntry {
  std::size_t index = 0;
  GraphPtr graph;
  SubgraphSpec removed;
  std::vector<SubgraphSpec> pieces;  // f^{j}(P), j < index
  MapPtr shift;                      // the map whose powers produced pieces
};

// 1 <= i <= kMaxTwinIndex; pieces are checked pairwise disjoint.
TwinFamilyEntry twin_family(const TwinWitness& tw, std::size_t i);
// Same construction with `shift` in place of the witness map.
TwinFamilyEntry twin_family_with(const TwinWitness& tw, const MapPtr& shift,
                                 std::size_t i);

struct MutualEmbeddings {
  MapPtr forward;   // G_i -> G_j
  MapPtr backward;  // G_j -> G_i
  VerificationReport forward_report;
  VerificationReport backward_report;
};
// Powers of f one way, inclusion the other; both verified as proper induced
// embeddings on a window of size n. Throws WitnessError on failure.
MutualEmbeddings mutual_embeddings(const TwinWitness& tw, std::size_t i,
                                   std::size_t j,
                                   std::size_t n = kEmbeddingWindow);

struct DeficiencyCount {
  std::size_t index = 0;
  std::size_t scan = 0;
  std::size_t count = 0;
  std::vector<std::size_t> mixed;  // shifts only partly removed
  std::vector<std::string> diagnostics;
};

// Number of k < scan with f^k(Q) wholly present in the entry and f^k(P)
// wholly removed. Throws InapplicableCertificate unless Q is ordinary.
DeficiencyCount deficiency_count(const TwinFamilyEntry& entry,
                                 const TwinWitness& tw, std::size_t scan);

struct NonIsoCertificate {
  enum class Verdict { kDistinct, kInconclusive };
  std::size_t i = 0, j = 0;
  std::size_t scan = 0;
  std::size_t count_i = 0, count_j = 0;
  Verdict verdict = Verdict::kInconclusive;
  std::vector<std::string> diagnostics;
};
std::string to_string(NonIsoCertificate::Verdict v);

// All pairs 1 <= i < j <= up_to. A count equal to `scan` is saturated and
// makes its pairs inconclusive.
std::vector<NonIsoCertificate> certify_pairwise_distinct(
    const TwinWitness& tw, std::size_t up_to, std::size_t scan);

struct SurveyEntry {
  std::size_t index = 0;
  Connectivity verdict = Connectivity::kVacuous;
};
// connected_window of each G_i, i <= up_to, built with `shift` (the
// fixed-first standard isomorphism for the final construction).
std::vector<SurveyEntry> connectivity_survey(const TwinWitness& tw,
                                             const MapPtr& shift,
                                             std::size_t up_to,
                                             std::size_t n);

}  // namespace twinbench

#endif  // TWINBENCH_TWINS_H_
