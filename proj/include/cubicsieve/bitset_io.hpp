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

/// @file bitset_io.hpp
/// @brief Binary bitset dump.
///
/// Layout: a 64-byte header followed by ceil(length / 8) payload bytes.
///   bytes  0..3   magic "CSV0" (the trailing digit is the format version)
///   bytes  4..7   zero
///   bytes  8..15  base, little-endian u64 (integer held by bit 0)
///   bytes 16..23  length in bits, little-endian u64
///   bytes 24..63  zero
/// Payload bit i (byte i / 8, bit i % 8, LSB first) is 1 iff base + i is set.
#pragma once

#include <array>
#include <iosfwd>

#include "cubicsieve/sieve_types.hpp"

namespace cubicsieve {

inline constexpr std::size_t kBitsetHeaderSize = 64;
inline constexpr std::array<char, 4> kBitsetMagic{'C', 'S', 'V', '0'};

void write_bitset(std::ostream& os, const SieveBits& bits);

/// Throws std::runtime_error on a bad magic or truncated stream.
SieveBits read_bitset(std::istream& is);

/// Streams a dump of [base, base + length) from ascending set positions,
/// without holding the whole bitset in memory.
class BitsetWriter {
public:
  BitsetWriter(std::ostream& os, u64 base, u64 length);

  /// Marks `value` as set. Values must be strictly increasing and in range.
  void mark(u64 value);

  /// Pads the payload to its full length. Called by the destructor if needed.
  void finish();

  ~BitsetWriter();
  BitsetWriter(const BitsetWriter&) = delete;
  BitsetWriter& operator=(const BitsetWriter&) = delete;

private:
  void advance_to(u64 position);

  std::ostream& os_;
  u64 base_;
  u64 length_;
  u64 position_ = 0;  // next bit index to be written
  unsigned char byte_ = 0;
  bool finished_ = false;
};

}  // namespace cubicsieve
