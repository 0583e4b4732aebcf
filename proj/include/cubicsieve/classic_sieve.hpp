// Copyright 2026 The cubicsieve Authors
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

/// @file classic_sieve.hpp
/// @brief Traditional sieves of Eratosthenes: simple, segmented, and
/// segmented for factorization.
///
/// All interval sieves cover the closed range [n, n + delta] and index
/// their output by offset from n.
#pragma once

#include <span>
#include <vector>

#include "cubicsieve/exactmath.hpp"
#include "cubicsieve/sieve_types.hpp"

namespace cubicsieve {

/// Primality of every integer in [1, limit]; bit j is 1 + j. limit >= 1.
SieveBits simple_siev(u64 limit);

std::vector<u64> primes_from(const SieveBits& bits);

/// Clears, for every p in `primes`, the multiples of p in the range of
/// `bits` that are >= 2p. Also clears 0 and 1.
void strike_multiples(SieveBits& bits, std::span<const u64> primes);
void strike_multiples(SieveBits& bits, u64 p);

/// [n, n + delta] sieved by the primes <= max_prime, which come from
/// simple_siev(max_prime).
SieveBits simple_seg_siev(u64 n, u64 delta, u64 max_prime, MemoryMeter* meter = nullptr);

/// Calls fn(p) for every prime p <= max_prime, ascending. The primes are
/// produced block by block over half-open windows [lo, lo + isqrt(max_prime)),
/// so at most O(sqrt(max_prime)) bits are live at once.
template <class Fn>
void for_each_prime_blockwise(u64 max_prime, Fn&& fn, MemoryMeter* meter = nullptr);

/// Same output as simple_seg_siev, with the sieving primes generated blockwise.
SieveBits sub_seg_siev(u64 n, u64 delta, u64 max_prime, MemoryMeter* meter = nullptr);

/// Primes in [n, n + delta].
SieveBits seg_siev(u64 n, u64 delta, MemoryMeter* meter = nullptr);

/// Drives `acc.add_prime_power(j, p, k)` for every prime p <= max_prime and
/// every k with p^k | n + j. n >= 1.
template <class Acc>
void sub_seg_siev_accumulate(u64 n, u64 delta, u64 max_prime, Acc& acc,
                             MemoryMeter* meter = nullptr);

/// Factors p <= max_prime of every integer in [n, n + delta]. n >= 1.
FactorTable sub_seg_siev_fac(u64 n, u64 delta, u64 max_prime, MemoryMeter* meter = nullptr);

/// Complete factorization of every integer in [n, n + delta]. n >= 1.
FactorTable seg_siev_fac(u64 n, u64 delta, MemoryMeter* meter = nullptr);

/// Moebius values of [n, n + delta] by the traditional segmented sieve. n >= 1.
std::vector<int> seg_siev_mobius(u64 n, u64 delta, MemoryMeter* meter = nullptr);

// ---------------------------------------------------------------------------

template <class Fn>
void for_each_prime_blockwise(u64 max_prime, Fn&& fn, MemoryMeter* meter) {
  if (max_prime < 2) return;
  const u64 block = std::max<u64>(1, isqrt(max_prime));
  // Primes up to sqrt of the last block end sieve every block.
  const SieveBits small_bits = simple_siev(std::max<u64>(1, isqrt(max_prime + block)));
  const std::vector<u64> small = primes_from(small_bits);
  const u64 small_bits_used = small_bits.memory_bits() + static_cast<u64>(small.size()) * 64;
  if (meter) meter->acquire(small_bits_used);

  for (u64 lo = 1; lo <= max_prime; lo += block) {
    const u64 hi = std::min(max_prime, lo + block - 1);
    SieveBits window(lo, hi - lo + 1, true);
    if (meter) meter->acquire(window.memory_bits());
    strike_multiples(window, small);
    window.for_each_set(fn);
    if (meter) meter->release(window.memory_bits());
  }
  if (meter) meter->release(small_bits_used);
}

template <class Acc>
void sub_seg_siev_accumulate(u64 n, u64 delta, u64 max_prime, Acc& acc, MemoryMeter* meter) {
  const wide_uint top = static_cast<wide_uint>(n) + delta;
  for_each_prime_blockwise(
      max_prime,
      [&](u64 p) {
        wide_uint d = p;
        for (u64 k = 1; d <= top; ++k, d *= p) {
          const u64 rem = n % static_cast<u64>(d);  // d <= n + delta fits a word
          wide_uint x = static_cast<wide_uint>(n) + (rem == 0 ? 0 : d - rem);
          for (; x <= top; x += d) acc.add_prime_power(static_cast<u64>(x - n), p, k);
        }
      },
      meter);
}

}  // namespace cubicsieve
