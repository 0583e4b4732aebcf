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

/// @file sieve_types.hpp
/// @brief Output containers shared by the classic and cubic sieves.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cubicsieve/exactmath.hpp"

namespace cubicsieve {

/// Thrown when a sieve is asked to run outside its preconditions
/// (for instance delta < n^(1/3) for the cubic sieve).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Tracks live and peak working storage, in bits.
struct MemoryMeter {
  u64 live = 0;
  u64 peak = 0;

  void acquire(u64 bits) {
    live += bits;
    peak = std::max(peak, live);
  }
  void release(u64 bits) { live -= std::min(live, bits); }
};

/// One bit per integer of [base, base + size).
class SieveBits {
public:
  SieveBits() = default;
  SieveBits(u64 base, u64 size, bool value);

  [[nodiscard]] u64 base() const { return base_; }
  [[nodiscard]] u64 size() const { return size_; }
  [[nodiscard]] u64 last() const { return base_ + size_ - 1; }

  [[nodiscard]] bool test(u64 j) const { return (words_[j >> 6] >> (j & 63)) & 1u; }
  void set(u64 j) { words_[j >> 6] |= u64(1) << (j & 63); }
  void reset(u64 j) { words_[j >> 6] &= ~(u64(1) << (j & 63)); }

  [[nodiscard]] u64 count() const;

  /// Calls fn(base + j) for every set bit, ascending.
  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (u64 w = 0; w < words_.size(); ++w) {
      u64 word = words_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        fn(base_ + (w << 6) + static_cast<u64>(bit));
        word &= word - 1;
      }
    }
  }

  [[nodiscard]] std::vector<u64> values() const;

  [[nodiscard]] std::span<const u64> words() const { return words_; }
  [[nodiscard]] std::span<u64> words() { return words_; }

  [[nodiscard]] u64 memory_bits() const { return static_cast<u64>(words_.size()) * 64; }

  friend bool operator==(const SieveBits&, const SieveBits&) = default;

private:
  void clear_tail();

  u64 base_ = 0;
  u64 size_ = 0;
  std::vector<u64> words_;
};

struct PrimePower {
  u64 prime = 0;
  u64 exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Per-offset factor lists F_j and smooth parts Pi_j = prod p^e over F_j.
///
/// The accumulator interface (add_prime_power / smooth / record / finish)
/// is shared with MobiusTable so both sieve skeletons drive either one.
class FactorTable {
public:
  FactorTable() = default;
  FactorTable(u64 base, u64 size);

  [[nodiscard]] u64 base() const { return base_; }
  [[nodiscard]] u64 size() const { return static_cast<u64>(smooth_.size()); }
  [[nodiscard]] u64 value(u64 j) const { return base_ + j; }

  [[nodiscard]] std::span<const PrimePower> factors(u64 j) const { return factors_[j]; }
  [[nodiscard]] u64 smooth(u64 j) const { return smooth_[j]; }

  /// p^k divides base + j; called for k = 1, 2, ... in order, primes ascending.
  void add_prime_power(u64 j, u64 p, u64 k) {
    auto& f = factors_[j];
    if (k == 1) f.push_back({p, 1}); else ++f.back().exponent;
    smooth_[j] *= p;
  }

  /// Records p^e as an exact prime-power factor, keeping primes ascending.
  void record(u64 j, u64 p, u64 e);

  /// Appends the leftover prime cofactor, if any. Returns true if one was added.
  bool finish(u64 j);

  [[nodiscard]] u64 memory_bits() const;

  friend bool operator==(const FactorTable&, const FactorTable&) = default;

private:
  u64 base_ = 0;
  std::vector<Factorization> factors_;
  std::vector<u64> smooth_;
};

/// Running Moebius state per offset: smooth part, parity and a
/// square-divisor flag.
class MobiusTable {
public:
  MobiusTable() = default;
  MobiusTable(u64 base, u64 size);

  [[nodiscard]] u64 base() const { return base_; }
  [[nodiscard]] u64 size() const { return static_cast<u64>(smooth_.size()); }
  [[nodiscard]] u64 smooth(u64 j) const { return smooth_[j]; }

  void add_prime_power(u64 j, u64 p, u64 k) {
    smooth_[j] *= p;
    if (k == 1) state_[j] ^= kOdd; else state_[j] |= kSquare;
  }

  void record(u64 j, u64 p, u64 e);
  bool finish(u64 j);

  [[nodiscard]] int mu(u64 j) const {
    if (state_[j] & kSquare) return 0;
    return (state_[j] & kOdd) ? -1 : 1;
  }
  [[nodiscard]] std::vector<int> values() const;

  [[nodiscard]] u64 memory_bits() const {
    return static_cast<u64>(smooth_.size()) * 64 + static_cast<u64>(state_.size()) * 8;
  }

private:
  static constexpr std::uint8_t kOdd = 1;
  static constexpr std::uint8_t kSquare = 2;

  u64 base_ = 0;
  std::vector<u64> smooth_;
  std::vector<std::uint8_t> state_;
};

/// Work and storage counters. `merge` sums counters and takes the max of
/// peak_bits, so it is associative and commutative.
struct SieveStats {
  u64 blocks = 0;
  u64 dioph_calls = 0;
  u64 candidates = 0;
  u64 hits = 0;
  u64 false_alarms = 0;
  u64 peak_bits = 0;
  u64 dioph_ns = 0;  // only populated with CUBICSIEVE_PROFILE

  void merge(const SieveStats& other);
  [[nodiscard]] bool consistent() const {
    return candidates == hits + false_alarms && dioph_calls == blocks;
  }

  friend bool operator==(const SieveStats&, const SieveStats&) = default;
};

}  // namespace cubicsieve
