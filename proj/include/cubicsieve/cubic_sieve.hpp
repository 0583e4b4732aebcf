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

/// @file cubic_sieve.hpp
/// @brief Sieving and factoring [n - delta, n + delta] with delta ~ n^(1/3)
/// in O(delta) space.
///
/// Divisors m <= K*delta are handled by a traditional segmented sieve. The
/// range (K*delta, sqrt(n + delta)] is walked in blocks [M, M + 2R] over
/// which n/m is close to the line n/m0 - (n/m0^2) r, m = m0 + r. A rational
/// approximation a/q of the slope (mod 1) turns "m has a multiple in the
/// interval" into a congruence r = -a^-1 (c + j) mod q, |j| <= k + 1, so only
/// those residue classes are visited. Every proposed m is verified before it
/// is used; a candidate whose multiple misses the interval is a false alarm.
#pragma once

#include <vector>

#include "cubicsieve/diophantine.hpp"
#include "cubicsieve/exactmath.hpp"
#include "cubicsieve/sieve_types.hpp"

namespace cubicsieve {

/// Interval center, half-width and the small-prime cutoff factor K >= 5/2.
struct SieveConfig {
  u64 n = 0;
  u64 delta = 0;
  u64 k_num = 3;
  u64 k_den = 1;

  /// floor(K * delta), the cutoff below which the classic sieve is used.
  [[nodiscard]] u64 small_cutoff() const;
  [[nodiscard]] u64 low() const { return n - delta; }
  [[nodiscard]] u64 high() const { return n + delta; }

  /// Throws ConfigError unless ceil(n^(1/3)) <= delta < n, n + delta fits in
  /// 64 bits and K >= 5/2.
  void validate() const;
  [[nodiscard]] bool valid() const;
};

/// Everything needed to enumerate the candidates of one block [M, M + 2R].
struct BlockParams {
  u64 start = 0;        // M
  u64 half_width = 0;   // R
  u64 center = 0;       // m0 = M + R
  Rational alpha1;      // {-n / m0^2}
  Rational alpha0;      // {n / m0}
  Rational eta;         // 5 delta / (4 M)
  DiophResult dioph;    // approximation of alpha1 with q <= 2R
  wide_int c = 0;       // floor(alpha0 q + 1/2)
  wide_int k = 0;       // floor(eta q)

  [[nodiscard]] u64 end() const { return start + 2 * half_width; }
};

/// Block parameters for the block starting at `start`.
/// Requires floor(K delta) < start <= sqrt(n + delta); throws ConfigError if
/// that fails or the half-width comes out as zero.
BlockParams block_params(u64 start, const SieveConfig& cfg);

/// Calls fn(m) for every m in [M, M + 2R] satisfying the block congruence.
/// Each residue class is visited once, so no m is proposed twice.
template <class Fn>
void for_each_candidate(const BlockParams& bp, Fn&& fn);

std::vector<u64> enumerate_candidates(const BlockParams& bp);

/// Calls visit(bp) for every block in order; returns the number of blocks.
template <class Fn>
u64 for_each_block(const SieveConfig& cfg, Fn&& visit);

/// Primality of [n - delta, n + delta]; bit i is n - delta + i.
SieveBits new_seg_siev(const SieveConfig& cfg, SieveStats* stats = nullptr);

/// Complete factorization of [n - delta, n + delta]. Needs n - delta >= 2.
FactorTable new_seg_siev_fac(const SieveConfig& cfg, SieveStats* stats = nullptr);

/// Moebius values of [n - delta, n + delta]. Needs n - delta >= 1.
std::vector<int> mobius_segment(const SieveConfig& cfg, SieveStats* stats = nullptr);

// ---------------------------------------------------------------------------

template <class Fn>
void for_each_candidate(const BlockParams& bp, Fn&& fn) {
  const u64 lo = bp.start;
  const u64 hi = bp.end();
  if (2 * bp.k + 3 >= bp.dioph.q) {
    // The j-range covers every residue class mod q.
    for (u64 m = lo; m <= hi; ++m) fn(m);
    return;
  }
  // Here q <= 2R, so residues and steps fit comfortably in 64 bits.
  const auto q = static_cast<u64>(bp.dioph.q);
  const auto step = static_cast<u64>(bp.dioph.a_inv);
  // m - M = R + r0 (mod q) with r0 = -a^-1 (c + j); j += 1 moves r0 by -a^-1.
  auto offset = static_cast<u64>(
      mod_floor(static_cast<wide_int>(bp.half_width) - bp.dioph.a_inv * (bp.c - bp.k - 1),
                bp.dioph.q));
  const u64 count = static_cast<u64>(2 * bp.k + 3);
  for (u64 i = 0; i < count; ++i) {
    for (u64 m = lo + offset; m <= hi; m += q) fn(m);
    offset = offset >= step ? offset - step : offset + q - step;
  }
}

template <class Fn>
u64 for_each_block(const SieveConfig& cfg, Fn&& visit) {
  const wide_uint top = static_cast<wide_uint>(cfg.high());
  u64 blocks = 0;
  for (u64 start = cfg.small_cutoff() + 1; static_cast<wide_uint>(start) * start <= top;) {
    const BlockParams bp = block_params(start, cfg);
    visit(bp);
    ++blocks;
    start = bp.end() + 1;
  }
  return blocks;
}

}  // namespace cubicsieve
