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

#include "cubicsieve/cubic_sieve.hpp"

#include <limits>
#include <string>

#ifdef CUBICSIEVE_PROFILE
#include <chrono>
#endif

#include "cubicsieve/classic_sieve.hpp"

namespace cubicsieve {

u64 SieveConfig::small_cutoff() const {
  return static_cast<u64>(static_cast<wide_uint>(k_num) * delta / k_den);
}

void SieveConfig::validate() const {
  if (k_den == 0) throw ConfigError("K has zero denominator");
  if (static_cast<wide_uint>(k_num) * 2 < static_cast<wide_uint>(k_den) * 5)
    throw ConfigError("K must be at least 5/2");
  if (delta == 0 || delta >= n) throw ConfigError("need 0 < delta < n");
  if (n > std::numeric_limits<u64>::max() - delta) throw ConfigError("n + delta exceeds 64 bits");
  if (delta < icbrt_ceil(n))
    throw ConfigError("delta " + std::to_string(delta) + " is below n^(1/3) = " +
                      std::to_string(icbrt_ceil(n)));
}

bool SieveConfig::valid() const {
  try {
    validate();
    return true;
  } catch (const ConfigError&) {
    return false;
  }
}

namespace {

BlockParams make_block(u64 start, const SieveConfig& cfg, SieveStats* stats) {
  if (start <= cfg.small_cutoff()) throw ConfigError("block start must exceed floor(K delta)");
  if (static_cast<wide_uint>(start) * start > static_cast<wide_uint>(cfg.high()))
    throw ConfigError("block start must be at most sqrt(n + delta)");

  BlockParams bp;
  bp.start = start;
  // R = floor(M sqrt(delta / 4n)) = isqrt(floor(delta M^2 / 4n)).
  const wide_uint m_sq = static_cast<wide_uint>(start) * start;
  bp.half_width = isqrt(m_sq * cfg.delta / (static_cast<wide_uint>(4) * cfg.n));
  if (bp.half_width == 0) throw ConfigError("block half-width is zero; delta too small for n");
  bp.center = start + bp.half_width;

  const wide_int m0 = bp.center;
  const wide_int n = cfg.n;
  bp.alpha1 = frac_part(-n, m0 * m0);
  bp.alpha0 = frac_part(n, m0);
  bp.eta = Rational(static_cast<wide_int>(5) * cfg.delta, static_cast<wide_int>(4) * start);

#ifdef CUBICSIEVE_PROFILE
  const auto t0 = std::chrono::steady_clock::now();
#endif
  bp.dioph = dioph_appr(bp.alpha1, static_cast<wide_int>(2) * bp.half_width);
#ifdef CUBICSIEVE_PROFILE
  if (stats) {
    stats->dioph_ns += static_cast<u64>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                            std::chrono::steady_clock::now() - t0)
                                            .count());
  }
#endif
  if (stats) ++stats->dioph_calls;

  bp.c = floor_scaled(bp.alpha0, bp.dioph.q, true);
  bp.k = floor_div(bp.eta.num() * bp.dioph.q, bp.eta.den());
  return bp;
}

// Sieves by every m > K delta, feeding verified divisors m of some integer
// in the interval to on_hit(m, multiple).
template <class OnHit>
void sieve_large_divisors(const SieveConfig& cfg, SieveStats& stats, OnHit&& on_hit) {
  const u64 top = cfg.high();
  const u64 low = cfg.low();
  const wide_uint top_wide = top;
  for (u64 start = cfg.small_cutoff() + 1; static_cast<wide_uint>(start) * start <= top_wide;) {
    const BlockParams bp = make_block(start, cfg, &stats);
    ++stats.blocks;
    u64 hits = 0, candidates = 0;
    for_each_candidate(bp, [&](u64 m) {
      ++candidates;
      const u64 multiple = top / m * m;
      if (multiple >= low) {
        ++hits;
        on_hit(m, multiple);
      }
    });
    stats.candidates += candidates;
    stats.hits += hits;
    stats.false_alarms += candidates - hits;
    start = bp.end() + 1;
  }
}

// Shared skeleton of the factoring and Moebius sieves over an accumulator.
template <class Acc>
void accumulate_centered(const SieveConfig& cfg, Acc& acc, SieveStats& stats, MemoryMeter& meter) {
  const u64 low = cfg.low();
  sub_seg_siev_accumulate(low, 2 * cfg.delta, cfg.small_cutoff(), acc, &meter);
  sieve_large_divisors(cfg, stats, [&](u64 m, u64 multiple) {
    if (multiple <= m) return;
    const u64 j = multiple - low;
    u64 rest = multiple / acc.smooth(j);
    // Only a prime m can still divide the unfactored part.
    if (rest % m != 0) return;
    rest /= m;
    acc.record(j, m, rest % m == 0 ? 2 : 1);
  });
  for (u64 j = 0; j < acc.size(); ++j) acc.finish(j);
}

}  // namespace

BlockParams block_params(u64 start, const SieveConfig& cfg) {
  cfg.validate();
  return make_block(start, cfg, nullptr);
}

std::vector<u64> enumerate_candidates(const BlockParams& bp) {
  std::vector<u64> out;
  for_each_candidate(bp, [&](u64 m) { out.push_back(m); });
  return out;
}

SieveBits new_seg_siev(const SieveConfig& cfg, SieveStats* stats) {
  cfg.validate();
  SieveStats local;
  MemoryMeter meter;
  SieveBits bits = sub_seg_siev(cfg.low(), 2 * cfg.delta, cfg.small_cutoff(), &meter);
  const u64 low = cfg.low();
  sieve_large_divisors(cfg, local, [&](u64 m, u64 multiple) {
    if (multiple > m) bits.reset(multiple - low);
  });
  local.peak_bits = meter.peak;
  if (stats) stats->merge(local);
  return bits;
}

FactorTable new_seg_siev_fac(const SieveConfig& cfg, SieveStats* stats) {
  cfg.validate();
  if (cfg.low() < 2) throw ConfigError("factoring needs n - delta >= 2");
  SieveStats local;
  MemoryMeter meter;
  FactorTable table(cfg.low(), 2 * cfg.delta + 1);
  accumulate_centered(cfg, table, local, meter);
  meter.acquire(table.memory_bits());
  local.peak_bits = meter.peak;
  if (stats) stats->merge(local);
  return table;
}

std::vector<int> mobius_segment(const SieveConfig& cfg, SieveStats* stats) {
  cfg.validate();
  SieveStats local;
  MemoryMeter meter;
  MobiusTable table(cfg.low(), 2 * cfg.delta + 1);
  meter.acquire(table.memory_bits());
  accumulate_centered(cfg, table, local, meter);
  local.peak_bits = meter.peak;
  if (stats) stats->merge(local);
  return table.values();
}

}  // namespace cubicsieve
