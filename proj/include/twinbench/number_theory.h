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

#ifndef TWINBENCH_NUMBER_THEORY_H_
#define TWINBENCH_NUMBER_THEORY_H_

#include <cstddef>
#include <cstdint>
#include <optional>

namespace twinbench {

// 1-based: nth_prime(1) == 2. Backed by a sieve of the primes below
// kPrimeTableLimit; throws std::out_of_range past the table.
inline constexpr std::uint64_t kPrimeTableLimit = 2'000'000;
std::uint64_t nth_prime(std::size_t n);

// Inverse of nth_prime for primes inside the table.
std::optional<std::size_t> prime_index(std::uint64_t p);

// Index of the smallest prime >= x, or nullopt past the table.
std::optional<std::size_t> prime_index_at_least(std::uint64_t x);

bool is_prime(std::uint64_t m);

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// (p, j) with m == p^j and j >= 1; nullopt for m < 2 and for non prime
// powers.
std::optional<PrimePower> prime_power_decompose(std::uint64_t m);

// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

// floor(m^(1/k)), k >= 1.
std::uint64_t integer_root(std::uint64_t m, unsigned k);

// Smallest r with m == r^s; returns (r, s). For m < 2 returns (m, 1).
struct PowerRoot {
  std::uint64_t root = 0;
  unsigned exponent = 1;
};
PowerRoot perfect_power_root(std::uint64_t m);

// Largest k with base^k <= m (base >= 2, m >= 1).
unsigned floor_log(std::uint64_t m, std::uint64_t base);

}  // namespace twinbench

#endif  // TWINBENCH_NUMBER_THEORY_H_
