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

#include "cubicsieve/classic_sieve.hpp"

namespace cubicsieve {

SieveBits simple_siev(u64 limit) {
  if (limit < 1) throw std::invalid_argument("simple_siev: limit must be >= 1");
  // Bit j holds 1 + j, so the odd integers sit on even j.
  SieveBits bits(1, limit, false);
  for (u64& w : bits.words()) w = 0x5555555555555555ULL;
  if (limit % 64 != 0) bits.words().back() &= (u64(1) << (limit % 64)) - 1;
  bits.reset(0);
  if (limit >= 2) bits.set(1);

  for (u64 m = 3; m * m <= limit; m += 2) {
    if (!bits.test(m - 1)) continue;
    for (u64 x = m * m; x <= limit; x += 2 * m) bits.reset(x - 1);
  }
  return bits;
}

std::vector<u64> primes_from(const SieveBits& bits) { return bits.values(); }

void strike_multiples(SieveBits& bits, u64 p) {
  const u64 n = bits.base();
  const wide_uint top = static_cast<wide_uint>(bits.last());
  const u64 rem = n % p;
  wide_uint start = static_cast<wide_uint>(n) + (rem == 0 ? 0 : p - rem);
  start = std::max<wide_uint>(start, static_cast<wide_uint>(2) * p);
  if (start > top) return;
  const u64 end = bits.size();
  for (u64 j = static_cast<u64>(start - n); j < end; j += p) bits.reset(j);
}

void strike_multiples(SieveBits& bits, std::span<const u64> primes) {
  const u64 n = bits.base();
  for (u64 v = n; v <= 1 && v - n < bits.size(); ++v) bits.reset(v - n);
  for (u64 p : primes) strike_multiples(bits, p);
}

SieveBits simple_seg_siev(u64 n, u64 delta, u64 max_prime, MemoryMeter* meter) {
  SieveBits out(n, delta + 1, true);
  if (meter) meter->acquire(out.memory_bits());
  std::vector<u64> primes;
  if (max_prime >= 2) {
    const SieveBits small = simple_siev(max_prime);
    primes = primes_from(small);
    if (meter) {
      meter->acquire(small.memory_bits());
      meter->release(small.memory_bits());
    }
  }
  strike_multiples(out, primes);
  return out;
}

SieveBits sub_seg_siev(u64 n, u64 delta, u64 max_prime, MemoryMeter* meter) {
  SieveBits out(n, delta + 1, true);
  if (meter) meter->acquire(out.memory_bits());
  strike_multiples(out, std::span<const u64>{});
  for_each_prime_blockwise(max_prime, [&](u64 p) { strike_multiples(out, p); }, meter);
  return out;
}

SieveBits seg_siev(u64 n, u64 delta, MemoryMeter* meter) {
  return sub_seg_siev(n, delta, isqrt(static_cast<wide_uint>(n) + delta), meter);
}

FactorTable sub_seg_siev_fac(u64 n, u64 delta, u64 max_prime, MemoryMeter* meter) {
  if (n < 1) throw std::invalid_argument("sub_seg_siev_fac: n must be >= 1");
  FactorTable table(n, delta + 1);
  sub_seg_siev_accumulate(n, delta, max_prime, table, meter);
  return table;
}

FactorTable seg_siev_fac(u64 n, u64 delta, MemoryMeter* meter) {
  FactorTable table = sub_seg_siev_fac(n, delta, isqrt(static_cast<wide_uint>(n) + delta), meter);
  for (u64 j = 0; j < table.size(); ++j) table.finish(j);
  if (meter) meter->acquire(table.memory_bits());
  return table;
}

std::vector<int> seg_siev_mobius(u64 n, u64 delta, MemoryMeter* meter) {
  if (n < 1) throw std::invalid_argument("seg_siev_mobius: n must be >= 1");
  MobiusTable table(n, delta + 1);
  if (meter) meter->acquire(table.memory_bits());
  sub_seg_siev_accumulate(n, delta, isqrt(static_cast<wide_uint>(n) + delta), table, meter);
  for (u64 j = 0; j < table.size(); ++j) table.finish(j);
  return table.values();
}

}  // namespace cubicsieve
