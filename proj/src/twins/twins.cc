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

#include "twinbench/twins.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "twinbench/errors.h"

namespace twinbench {
namespace {

constexpr std::size_t kScanForDecisions = 10'000;

// The same vertex function viewed between other presentations; backward is
// the original preimage filtered by membership in the new source.
MapPtr reseat(const MapPtr& map, GraphPtr source, GraphPtr target,
              std::string name) {
  MapParts parts = map->parts();
  parts.name = std::move(name);
  parts.source = std::move(source);
  parts.target = std::move(target);
  return make_map(std::move(parts));
}

MapPtr inclusion(const GraphPtr& source, const GraphPtr& target) {
  return reseat(identity_map(target), source, target, "incl");
}

}  // namespace

TwinWitness make_twin_witness(RemovableWitness base, SubgraphSpec p,
                              bool declared_nonremovable) {
  const ScanScope scope{base.graph, kScanForDecisions};
  if (spec_empty(p) == true) {
    throw WitnessError("P must be nonempty");
  }
  const auto inside = spec_contains(base.removed, p, &scope);
  if (inside.kind == ContainmentVerdict::Kind::kNotContained) {
    throw WitnessError("P is not contained in H", inside.witness);
  }
  TwinWitness tw;
  tw.q = SubgraphSpec::difference(base.removed, p);
  tw.p = std::move(p);
  tw.base = std::move(base);
  tw.declared_nonremovable = declared_nonremovable;
  if (const auto nf = normalize(tw.q)) {
    if (auto pts = nf->points(); pts && !pts->empty()) {
      tw.ordinary = OrdinaryTag{std::move(*pts)};
    }
  }
  return tw;
}

StrongTwin strong_twin(const TwinWitness& tw) {
  const GraphPtr& g = tw.base.graph;
  GraphPtr g1 = remove(g, tw.p);
  StrongTwin out;
  out.embed_up = inclusion(g1, g);
  out.embed_down = reseat(tw.base.map, g, g1, tw.base.map->name());
  out.graph = std::move(g1);
  return out;
}

TwinFamilyEntry twin_family(const TwinWitness& tw, std::size_t i) {
  return twin_family_with(tw, tw.base.map, i);
}

TwinFamilyEntry twin_family_with(const TwinWitness& tw, const MapPtr& shift,
                                 std::size_t i) {
  if (i < 1 || i > kMaxTwinIndex) {
    throw std::out_of_range("twin index must lie in [1, " +
                            std::to_string(kMaxTwinIndex) + "]");
  }
  TwinFamilyEntry entry;
  entry.index = i;
  entry.shift = shift;
  for (std::size_t j = 0; j < i; ++j) {
    entry.pieces.push_back(
        j == 0 ? tw.p
               : SubgraphSpec::image(power(shift, static_cast<int>(j)), tw.p));
  }
  const ScanScope scope{tw.base.graph, kScanForDecisions};
  for (std::size_t a = 0; a < i; ++a) {
    for (std::size_t b = a + 1; b < i; ++b) {
      const auto v = spec_disjoint(entry.pieces[a], entry.pieces[b], &scope);
      if (v.kind == DisjointVerdict::Kind::kIntersecting) {
        throw WitnessError("shifted copies " + std::to_string(a) + " and " +
                               std::to_string(b) + " of P overlap",
                           v.witness);
      }
    }
  }
  entry.removed =
      i == 1 ? tw.p : SubgraphSpec::union_of(entry.pieces);
  entry.graph = remove(tw.base.graph, entry.removed);
  return entry;
}

MutualEmbeddings mutual_embeddings(const TwinWitness& tw, std::size_t i,
                                   std::size_t j, std::size_t n) {
  if (i == j) throw std::invalid_argument("embeddings need i != j");
  const TwinFamilyEntry gi = twin_family(tw, i);
  const TwinFamilyEntry gj = twin_family(tw, j);
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  const TwinFamilyEntry& small = lo == i ? gi : gj;  // G_lo, the larger graph
  const TwinFamilyEntry& big = lo == i ? gj : gi;
  const MapPtr down = reseat(power(tw.base.map, static_cast<int>(hi - lo)),
                             small.graph, big.graph,
                             tw.base.map->name() + "^" +
                                 std::to_string(hi - lo));
  const MapPtr up = inclusion(big.graph, small.graph);
  MutualEmbeddings out;
  out.forward = lo == i ? down : up;
  out.backward = lo == i ? up : down;
  out.forward_report =
      verify_embedding_window(*out.forward, *gi.graph, *gj.graph, n);
  out.backward_report =
      verify_embedding_window(*out.backward, *gj.graph, *gi.graph, n);
  for (const auto* r : {&out.forward_report, &out.backward_report}) {
    if (!r->pass()) {
      throw WitnessError(r->subject + " fails with " +
                         std::to_string(r->violation_count()) +
                         " violations");
    }
  }
  return out;
}

DeficiencyCount deficiency_count(const TwinFamilyEntry& entry,
                                 const TwinWitness& tw, std::size_t scan) {
  if (!tw.ordinary) {
    const bool empty = spec_empty(tw.q) == true;
    throw InapplicableCertificate(empty
                                      ? "certificate inapplicable: Q empty"
                                      : "certificate inapplicable: Q infinite");
  }
  if (scan > static_cast<std::size_t>(kMaxPower) + 1) {
    throw std::out_of_range("scan bound exceeds " +
                            std::to_string(kMaxPower + 1));
  }
  DeficiencyCount out;
  out.index = entry.index;
  out.scan = scan;
  const ScanScope scope{tw.base.graph, kScanForDecisions};
  for (std::size_t k = 0; k < scan; ++k) {
    const MapPtr fk = power(entry.shift, static_cast<int>(k));
    std::size_t present = 0;
    for (const VertexId& v : tw.ordinary->q) {
      if (entry.graph->contains(fk->apply_unchecked(v))) ++present;
    }
    const SubgraphSpec pk = k == 0 ? tw.p : SubgraphSpec::image(fk, tw.p);
    const auto gone = spec_contains(entry.removed, pk, &scope);
    const auto kept = spec_disjoint(pk, entry.removed, &scope);
    const bool p_absent = gone.kind == ContainmentVerdict::Kind::kContained;
    const bool p_present = kept.kind == DisjointVerdict::Kind::kDisjoint;
    const bool q_full = present == tw.ordinary->q.size();
    const bool q_none = present == 0;
    if ((!q_full && !q_none) || (!p_absent && !p_present)) {
      out.mixed.push_back(k);
      out.diagnostics.push_back(
          "shift " + std::to_string(k) + ": " + std::to_string(present) +
          "/" + std::to_string(tw.ordinary->q.size()) + " of Q present, P " +
          (p_absent ? "removed"
                    : p_present ? "present" : "partly removed or undecided"));
      continue;
    }
    if (q_full && p_absent) ++out.count;
  }
  return out;
}

std::string to_string(NonIsoCertificate::Verdict v) {
  return v == NonIsoCertificate::Verdict::kDistinct ? "distinct"
                                                    : "inconclusive";
}

std::vector<NonIsoCertificate> certify_pairwise_distinct(
    const TwinWitness& tw, std::size_t up_to, std::size_t scan) {
  std::vector<DeficiencyCount> counts;
  for (std::size_t i = 1; i <= up_to; ++i) {
    counts.push_back(deficiency_count(twin_family(tw, i), tw, scan));
  }
  std::vector<NonIsoCertificate> out;
  for (std::size_t i = 1; i <= up_to; ++i) {
    for (std::size_t j = i + 1; j <= up_to; ++j) {
      const DeficiencyCount& di = counts[i - 1];
      const DeficiencyCount& dj = counts[j - 1];
      NonIsoCertificate c;
      c.i = i;
      c.j = j;
      c.scan = scan;
      c.count_i = di.count;
      c.count_j = dj.count;
      for (const auto* d : {&di, &dj}) {
        for (std::size_t k : d->mixed) {
          c.diagnostics.push_back("G_" + std::to_string(d->index) +
                                  " mixed at shift " + std::to_string(k));
        }
        if (d->count == scan) {
          c.diagnostics.push_back("G_" + std::to_string(d->index) +
                                  " count saturates the scan bound " +
                                  std::to_string(scan));
        }
      }
      const bool clean = c.diagnostics.empty();
      c.verdict = clean && c.count_i != c.count_j
                      ? NonIsoCertificate::Verdict::kDistinct
                      : NonIsoCertificate::Verdict::kInconclusive;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<SurveyEntry> connectivity_survey(const TwinWitness& tw,
                                             const MapPtr& shift,
                                             std::size_t up_to,
                                             std::size_t n) {
  std::vector<SurveyEntry> out;
  for (std::size_t i = 1; i <= up_to; ++i) {
    const TwinFamilyEntry entry = twin_family_with(tw, shift, i);
    out.push_back({i, connected_window(*entry.graph, n)});
  }
  return out;
}

}  // namespace twinbench
