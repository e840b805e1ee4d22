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

#include "twinbench/verify.h"

#include <algorithm>
#include <exception>
#include <numeric>
#include <utility>

namespace twinbench {
namespace {

bool member_of(const Graph& g, const VertexId& v) {
  try {
    return g.contains(v);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// Shared body of the iso and embedding checks. Images are computed once;
// pairs are scanned with adjacent_members on both sides.
void check_injective_adjacency(const VertexMap& m, const Graph& g,
                               const Graph& h, std::size_t n,
                               VerificationReport& report) {
  const std::vector<VertexId> verts = g.first(n);
  std::vector<std::optional<VertexId>> images(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    try {
      images[i] = m.apply_unchecked(verts[i]);
    } catch (const std::exception& e) {
      report.membership.add({verts[i], std::nullopt, e.what()});
      continue;
    }
    if (!member_of(h, *images[i])) {
      report.membership.add(
          {verts[i], images[i], "image is not a vertex of " + h.family_id()});
      images[i].reset();
      continue;
    }
    const auto back = m.preimage(*images[i]);
    if (!back || *back != verts[i]) {
      report.inverse.add({verts[i], back,
                          back ? "backward returns a different vertex"
                               : "backward is undefined on the image"});
    }
  }

  std::vector<std::size_t> order(verts.size());
  std::iota(order.begin(), order.end(), 0);
  order.erase(std::remove_if(order.begin(), order.end(),
                             [&](std::size_t i) { return !images[i]; }),
              order.end());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return *images[a] < *images[b];
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (*images[order[k - 1]] == *images[order[k]]) {
      report.injectivity.add({verts[order[k - 1]], verts[order[k]],
                              "both map to " + to_string(*images[order[k]])});
    }
  }

  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      ++report.checked_pairs;
      if (!images[i] || !images[j]) continue;
      const bool before = g.adjacent_members(verts[i], verts[j]);
      const bool after = *images[i] != *images[j] &&
                         h.adjacent_members(*images[i], *images[j]);
      if (before && !after) {
        report.adjacency.add({verts[i], verts[j], "adjacency lost"});
      } else if (!before && after) {
        report.non_adjacency.add({verts[i], verts[j], "adjacency created"});
      }
    }
  }
}

}  // namespace

void ViolationList::add(Violation v) {
  ++count;
  if (items.size() < kMaxListedViolations) items.push_back(std::move(v));
}

std::size_t VerificationReport::violation_count() const {
  return membership.count + injectivity.count + inverse.count +
         adjacency.count + non_adjacency.count + surjectivity.count +
         set_image.count + square.count + off_support.count;
}

bool VerificationReport::pass() const { return violation_count() == 0; }

VerificationReport verify_iso_window(const VertexMap& m, const Graph& g,
                                     const Graph& h, std::size_t n) {
  VerificationReport report;
  report.subject = m.name() + ": " + g.family_id() + " -> " + h.family_id();
  report.window_size = n;
  check_injective_adjacency(m, g, h, n, report);
  for (const VertexId& w : h.first(n)) {
    const auto u = m.preimage(w);
    if (!u) {
      report.surjectivity.add({w, std::nullopt, "no preimage"});
      continue;
    }
    VertexId again;
    try {
      again = m.apply_unchecked(*u);
    } catch (const std::exception& e) {
      report.surjectivity.add({w, u, e.what()});
      continue;
    }
    if (again != w) {
      report.surjectivity.add({w, u, "forward(backward(w)) != w"});
    }
  }
  report.notes.push_back(
      "surjectivity is a proxy: forward(backward(w)) == w on the first " +
      std::to_string(n) + " target vertices");
  return report;
}

VerificationReport verify_embedding_window(const VertexMap& m, const Graph& g,
                                           const Graph& h, std::size_t n,
                                           bool require_proper) {
  VerificationReport report;
  report.subject =
      m.name() + ": " + g.family_id() + " embeds into " + h.family_id();
  report.window_size = n;
  check_injective_adjacency(m, g, h, n, report);
  for (const VertexId& w : h.first(n)) {
    if (!m.preimage(w)) {
      report.properness_witness = w;
      break;
    }
  }
  if (require_proper && !report.properness_witness) {
    report.surjectivity.add(
        {VertexId{}, std::nullopt,
         "no target vertex outside the image among the first " +
             std::to_string(n)});
  }
  return report;
}

}  // namespace twinbench
