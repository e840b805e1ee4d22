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

// Independent reference implementations for the test suites. Nothing here
// calls into the library: primes come from trial division and adjacency is
// transcribed from the family definitions.

#ifndef TWINBENCH_TESTS_ORACLES_H_
#define TWINBENCH_TESTS_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "twinbench/vertex.h"

namespace twinbench {

// Lets gtest print vertices in failure messages.
inline void PrintTo(const VertexId& v, std::ostream* os) { *os << to_string(v); }

}  // namespace twinbench

namespace twinbench::oracle {

inline bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

// 1-based.
inline std::uint64_t nth_prime(std::size_t n) {
  std::uint64_t p = 1;
  while (n > 0) {
    ++p;
    if (is_prime(p)) --n;
  }
  return p;
}

inline std::size_t prime_index(std::uint64_t p) {
  std::size_t n = 0;
  for (std::uint64_t q = 2; q <= p; ++q) n += is_prime(q) ? 1 : 0;
  return n;
}

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

inline std::optional<PrimePower> decompose(std::uint64_t m) {
  if (m < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (m % p != 0) ++p;
  unsigned e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{p, e};
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline VertexId o() { return VertexId{"o", {}}; }
inline VertexId a(Coord x, Coord j) { return VertexId{"a", {x, j}}; }
inline VertexId k(Coord j, Coord m) { return VertexId{"k", {j, m}}; }
inline VertexId r(Coord n) { return VertexId{"r", {n}}; }

inline bool star_adjacent(const VertexId& u, const VertexId& v) {
  auto one = [](const VertexId& x, const VertexId& y) {
    if (x.tag == "o" && y.tag == "a") return y.coords[0] == 1;
    if (x.tag == "a" && y.tag == "a") {
      return x.coords[0] == 1 && y.coords[0] == 2 &&
             x.coords[1] == y.coords[1];
    }
    return false;
  };
  return one(u, v) || one(v, u);
}

inline bool clique_adjacent(const VertexId& u, const VertexId& v) {
  if (u == v) return false;
  if (u.tag == "o" || v.tag == "o") {
    const VertexId& w = u.tag == "o" ? v : u;
    return w.tag == "k" && w.coords[0] == 1;
  }
  const Coord j1 = u.coords[0], m1 = u.coords[1];
  const Coord j2 = v.coords[0], m2 = v.coords[1];
  if (j1 == j2) return true;
  return m1 == m2 && (j1 + 1 == j2 || j2 + 1 == j1);
}

inline bool ray_adjacent(const VertexId& u, const VertexId& v) {
  const Coord x = u.coords[0], y = v.coords[0];
  return x + 1 == y || y + 1 == x;
}

inline std::vector<VertexId> star_prefix(std::size_t n) {
  std::vector<VertexId> out{o()};
  for (Coord j = 1; out.size() < n; ++j) {
    out.push_back(a(1, j));
    if (out.size() < n) out.push_back(a(2, j));
  }
  out.resize(n);
  return out;
}

inline std::vector<VertexId> clique_prefix(std::size_t n) {
  std::vector<VertexId> out{o()};
  for (Coord s = 2; out.size() < n; ++s) {
    for (Coord j = 1; j < s && out.size() < n; ++j) out.push_back(k(j, s - j));
  }
  out.resize(n);
  return out;
}

inline std::vector<VertexId> ray_prefix(std::size_t n) {
  std::vector<VertexId> out;
  for (Coord i = 1; i <= n; ++i) out.push_back(r(i));
  return out;
}

// The prime-power column shift, p_n^e -> p_{n+1}^e on either level.
inline VertexId star_shift(const VertexId& v) {
  if (v.tag != "a") return v;
  const auto pp = decompose(v.coords[1]);
  if (!pp) return v;
  std::uint64_t q = pp->prime + 1;
  while (!is_prime(q)) ++q;
  return a(v.coords[0], ipow(q, pp->exponent));
}

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

template <typename Adj>
Edges brute_edges(const std::vector<VertexId>& vs, Adj adj) {
  Edges out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (adj(vs[i], vs[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

// Deterministic generator for property tests; the seed is fixed per suite
// so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  VertexId star_vertex(Coord max_j = 5000) {
    if (uniform(0, 50) == 0) return o();
    return a(uniform(1, 2), uniform(1, max_j));
  }
  VertexId clique_vertex(Coord max = 200) {
    if (uniform(0, 50) == 0) return o();
    return k(uniform(1, max), uniform(1, max));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace twinbench::oracle

#endif  // TWINBENCH_TESTS_ORACLES_H_
