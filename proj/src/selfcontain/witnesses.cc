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

#include <string>
#include <utility>

#include "twinbench/errors.h"
#include "twinbench/selfcontain.h"

namespace twinbench {
namespace {

constexpr std::size_t kMaxCopies = 64;
constexpr std::size_t kDisjointScan = 10'000;

}  // namespace

RemovableWitness make_removable_witness(std::string name, GraphPtr graph,
                                        SubgraphSpec removed, MapPtr map) {
  MapParts parts = map->parts();
  parts.source = graph;
  parts.target = remove(graph, removed);
  return RemovableWitness{std::move(name), std::move(graph),
                          std::move(removed), make_map(std::move(parts))};
}

VerificationReport verify_removable(const RemovableWitness& w, std::size_t n) {
  VerificationReport report =
      verify_iso_window(*w.map, *w.graph, *w.map->target(), n);
  const ScanScope scope{w.graph, n};
  const auto verdict = spec_disjoint(SubgraphSpec::image(w.map, w.removed),
                                     w.removed, &scope);
  switch (verdict.kind) {
    case DisjointVerdict::Kind::kIntersecting:
      report.membership.add({*verdict.witness, std::nullopt,
                             "f(H) meets H"});
      break;
    case DisjointVerdict::Kind::kApproximate:
      report.notes.push_back("f(H) and H disjoint on a scan of " +
                             std::to_string(verdict.scan_bound) +
                             " vertices (approximate)");
      break;
    case DisjointVerdict::Kind::kDisjoint:
      report.notes.push_back("f(H) and H exactly disjoint");
      break;
  }
  return report;
}

VerificationReport verify_alternating(const WellManneredWitness& w,
                                      std::size_t n) {
  const Graph& g = *w.base.graph;
  const SubgraphSpec& h = w.base.removed;
  const VertexMap& f = *w.base.map;
  const VertexMap& alpha = *w.alpha;
  VerificationReport report = verify_iso_window(alpha, g, g, n);
  report.subject = "alternating " + alpha.name() + " for " + w.base.name;

  const auto in_fh = [&](const VertexId& x) {
    const auto pre = f.preimage(x);
    return pre && h.contains(*pre);
  };
  for (const VertexId& v : g.first(n)) {
    const bool in_h = h.contains(v);
    if (in_h) {
      const VertexId a = alpha.apply_unchecked(v);
      if (!in_fh(a)) {
        report.set_image.add({v, a, "alpha(v) is outside f(H)"});
      }
      const VertexId fv = f.apply_unchecked(v);
      const auto back = alpha.preimage(fv);
      if (!back || !h.contains(*back)) {
        report.set_image.add({v, fv, "f(v) is outside alpha(H)"});
      }
      const VertexId sq = alpha.apply_unchecked(a);
      if (!h.contains(sq)) {
        report.square.add({v, sq, "alpha^2(v) is outside H"});
      }
    } else if (!in_fh(v)) {
      const VertexId a = alpha.apply_unchecked(v);
      if (a != v) report.off_support.add({v, a, "alpha moves v"});
    }
  }
  report.notes.push_back(
      "set images compared on the first " + std::to_string(n) + " vertices");
  return report;
}

RemovableWitness reverse_witness(const WellManneredWitness& w, std::size_t n) {
  const VerificationReport report = verify_alternating(w, n);
  if (!report.pass()) {
    throw WitnessError(w.base.name + ": alternating check failed with " +
                       std::to_string(report.violation_count()) +
                       " violations");
  }
  const MapPtr g = compose(w.alpha, compose(w.base.map, w.alpha));
  return make_removable_witness("reverse(" + w.base.name + ")", w.base.graph,
                                SubgraphSpec::image(w.base.map,
                                                    w.base.removed),
                                g);
}

WellManneredWitness reverse_well_mannered(const WellManneredWitness& w,
                                          std::size_t n) {
  return WellManneredWitness{reverse_witness(w, n), w.alpha};
}

std::vector<SubgraphSpec> disjoint_copies(const RemovableWitness& w,
                                          std::size_t k) {
  if (k > kMaxCopies) {
    throw std::out_of_range("at most " + std::to_string(kMaxCopies) +
                            " copies");
  }
  std::vector<SubgraphSpec> copies;
  for (std::size_t j = 0; j < k; ++j) {
    copies.push_back(j == 0 ? w.removed
                            : SubgraphSpec::image(
                                  power(w.map, static_cast<int>(j)),
                                  w.removed));
  }
  const ScanScope scope{w.graph, kDisjointScan};
  for (std::size_t a = 0; a < copies.size(); ++a) {
    for (std::size_t b = a + 1; b < copies.size(); ++b) {
      const auto v = spec_disjoint(copies[a], copies[b], &scope);
      if (v.kind == DisjointVerdict::Kind::kIntersecting) {
        throw WitnessError("copies " + std::to_string(a) + " and " +
                               std::to_string(b) + " of " + w.name +
                               " share " + to_string(*v.witness),
                           v.witness);
      }
    }
  }
  return copies;
}

RemovableWitness compose_removable(const RemovableWitness& wp,
                                   const RemovableWitness& wq) {
  const SubgraphSpec* cut = removal_spec(*wq.graph);
  if (wq.graph->root_family() != wp.graph->root_family() || cut == nullptr ||
      wq.graph->parent() != wp.graph.get() ||
      spec_equal(*cut, wp.removed) == false) {
    throw FamilyMismatch(wq.name + " is not a witness over " +
                         wp.graph->family_id() + " minus " +
                         wp.removed.to_string());
  }
  if (spec_empty(wq.removed) == true) return wp;
  return make_removable_witness(
      wp.name + "+" + wq.name, wp.graph,
      SubgraphSpec::union_of({wp.removed, wq.removed}),
      compose(wq.map, wp.map));
}

std::string to_string(Twist t) {
  switch (t) {
    case Twist::kTwisted:
      return "twisted";
    case Twist::kNotTwisted:
      return "not-twisted";
    case Twist::kUnknown:
      return "unknown";
  }
  return "?";
}

Twist is_twisted_vertex(const VertexId& v, const RemovableWitness& h,
                        const TorsionCatalogue& cat) {
  bool in_p = false;
  for (const auto& w : cat.rem_g) {
    if (w.removed.contains(v)) {
      in_p = true;
      break;
    }
  }
  if (!in_p) return Twist::kUnknown;
  const VertexId u = h.removed.contains(v) ? h.map->apply_unchecked(v) : v;
  for (const auto& w : cat.rem_g_minus_h) {
    if (w.removed.contains(u)) return Twist::kNotTwisted;
  }
  return Twist::kTwisted;
}

SubgraphSpec torsion(const RemovableWitness& h, const TorsionCatalogue& cat,
                     std::size_t n) {
  std::vector<VertexId> twisted;
  for (const VertexId& v : h.graph->first(n)) {
    if (is_twisted_vertex(v, h, cat) == Twist::kTwisted) twisted.push_back(v);
  }
  return SubgraphSpec::finite(std::move(twisted));
}

}  // namespace twinbench
