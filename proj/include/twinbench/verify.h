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

#ifndef TWINBENCH_VERIFY_H_
#define TWINBENCH_VERIFY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twinbench/graph.h"
#include "twinbench/vertex.h"
#include "twinbench/vertex_map.h"

namespace twinbench {

inline constexpr std::size_t kMaxListedViolations = 20;

struct Violation {
  VertexId first;
  std::optional<VertexId> second;
  std::string detail;
};

// Full count plus the first kMaxListedViolations witnesses.
struct ViolationList {
  std::size_t count = 0;
  std::vector<Violation> items;

  void add(Violation v);
  bool empty() const { return count == 0; }
};

// Outcome of a window check. Every list is empty iff pass() holds.
struct VerificationReport {
  std::string subject;
  std::size_t window_size = 0;
  std::size_t checked_pairs = 0;

  ViolationList membership;     // image outside the target
  ViolationList injectivity;    // two window vertices share an image
  ViolationList inverse;        // backward(forward(u)) != u
  ViolationList adjacency;      // u ~ v but m(u) !~ m(v)
  ViolationList non_adjacency;  // u !~ v but m(u) ~ m(v)
  ViolationList surjectivity;   // target window vertex with no preimage
  // Alternating-automorphism checks.
  ViolationList set_image;      // alpha(H) and f(H) differ on the window
  ViolationList square;         // alpha^2 moves a vertex of H out of H
  ViolationList off_support;    // alpha moves a vertex outside H ∪ f(H)

  // Free-form remarks, e.g. that surjectivity is an inverse-based proxy.
  std::vector<std::string> notes;
  // For embeddings: a target window vertex outside the image.
  std::optional<VertexId> properness_witness;

  bool pass() const;
  std::size_t violation_count() const;
};

// Checks m : G -> H on the first n vertices of G (all pairs) and, for the
// surjectivity proxy, on the first n vertices of H.
VerificationReport verify_iso_window(const VertexMap& m, const Graph& g,
                                     const Graph& h, std::size_t n);

// As verify_iso_window but without the surjectivity proxy; additionally
// records a properness witness (a vertex among the first n of H missing from
// the image). A missing witness is reported as a membership-style failure
// only when `require_proper` is set.
VerificationReport verify_embedding_window(const VertexMap& m, const Graph& g,
                                           const Graph& h, std::size_t n,
                                           bool require_proper = true);

}  // namespace twinbench

#endif  // TWINBENCH_VERIFY_H_
