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

#include "twinbench/number_theory.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace twinbench {
namespace {

const std::vector<std::uint64_t>& prime_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<bool> composite(kPrimeTableLimit, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i < kPrimeTableLimit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = i * i; j < kPrimeTableLimit; j += i) {
        composite[j] = true;
      }
    }
    return primes;
  }();
  return table;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t nth_prime(std::size_t n) {
  const auto& table = prime_table();
  if (n == 0 || n > table.size()) {
    throw std::out_of_range("nth_prime: index " + std::to_string(n) +
                            " outside the prime table");
  }
  return table[n - 1];
}

std::optional<std::size_t> prime_index(std::uint64_t p) {
  const auto& table = prime_table();
  const auto it = std::lower_bound(table.begin(), table.end(), p);
  if (it == table.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - table.begin()) + 1;
}

std::optional<std::size_t> prime_index_at_least(std::uint64_t x) {
  const auto& table = prime_table();
  const auto it = std::lower_bound(table.begin(), table.end(), x);
  if (it == table.end()) return std::nullopt;
  return static_cast<std::size_t>(it - table.begin()) + 1;
}

// Deterministic Miller-Rabin; these bases cover all 64-bit integers.
bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (m % p == 0) return m == p;
  }
  std::uint64_t d = m - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::nullopt;
    }
    result *= base;
  }
  return result;
}

std::uint64_t integer_root(std::uint64_t m, unsigned k) {
  if (k <= 1 || m < 2) return m;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::min<std::uint64_t>(m, k == 2 ? 4294967296ULL
                                                       : 2642246ULL);
  // Largest r in [lo, hi] with r^k <= m.
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    const auto p = checked_pow(mid, k);
    if (p && *p <= m) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

PowerRoot perfect_power_root(std::uint64_t m) {
  if (m < 4) return {m, 1};
  for (unsigned s = floor_log(m, 2); s >= 2; --s) {
    const std::uint64_t r = integer_root(m, s);
    if (r >= 2) {
      const auto p = checked_pow(r, s);
      // The largest such s yields the smallest root.
      if (p && *p == m) return {r, s};
    }
  }
  return {m, 1};
}

std::optional<PrimePower> prime_power_decompose(std::uint64_t m) {
  if (m < 2) return std::nullopt;
  const PowerRoot root = perfect_power_root(m);
  if (!is_prime(root.root)) return std::nullopt;
  return PrimePower{root.root, root.exponent};
}

unsigned floor_log(std::uint64_t m, std::uint64_t base) {
  unsigned k = 0;
  std::uint64_t acc = 1;
  while (acc <= m / base) {
    acc *= base;
    ++k;
  }
  return k;
}

}  // namespace twinbench
