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

#include "cubicsieve/bitset_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace cubicsieve {

namespace {

void put_u64(unsigned char* out, u64 v) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

u64 get_u64(const unsigned char* in) {
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<u64>(in[i]) << (8 * i);
  return v;
}

void write_header(std::ostream& os, u64 base, u64 length) {
  std::array<unsigned char, kBitsetHeaderSize> header{};
  std::copy(kBitsetMagic.begin(), kBitsetMagic.end(), header.begin());
  put_u64(header.data() + 8, base);
  put_u64(header.data() + 16, length);
  os.write(reinterpret_cast<const char*>(header.data()), header.size());
}

}  // namespace

void write_bitset(std::ostream& os, const SieveBits& bits) {
  write_header(os, bits.base(), bits.size());
  const u64 nbytes = (bits.size() + 7) / 8;
  unsigned char buf[8];
  u64 written = 0;
  for (u64 w : bits.words()) {
    put_u64(buf, w);
    const u64 take = std::min<u64>(8, nbytes - written);
    os.write(reinterpret_cast<const char*>(buf), static_cast<std::streamsize>(take));
    written += take;
    if (written == nbytes) break;
  }
}

SieveBits read_bitset(std::istream& is) {
  std::array<unsigned char, kBitsetHeaderSize> header{};
  if (!is.read(reinterpret_cast<char*>(header.data()), header.size()))
    throw std::runtime_error("bitset: truncated header");
  if (!std::equal(kBitsetMagic.begin(), kBitsetMagic.end(), header.begin()))
    throw std::runtime_error("bitset: bad magic");
  const u64 base = get_u64(header.data() + 8);
  const u64 length = get_u64(header.data() + 16);
  SieveBits bits(base, length, false);
  std::vector<unsigned char> payload((length + 7) / 8);
  if (!is.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(payload.size())))
    throw std::runtime_error("bitset: truncated payload");
  auto words = bits.words();
  for (u64 i = 0; i < payload.size(); ++i) words[i / 8] |= static_cast<u64>(payload[i]) << (8 * (i % 8));
  if (length % 8 != 0 && (payload.back() >> (length % 8)) != 0)
    throw std::runtime_error("bitset: padding bits set");
  return bits;
}

BitsetWriter::BitsetWriter(std::ostream& os, u64 base, u64 length)
    : os_(os), base_(base), length_(length) {
  write_header(os_, base_, length_);
}

BitsetWriter::~BitsetWriter() {
  if (!finished_) {
    try {
      finish();
    } catch (...) {
    }
  }
}

void BitsetWriter::advance_to(u64 position) {
  // Flush whole bytes between the current position and `position`.
  while (position_ < position) {
    if (position_ % 8 == 0 && position - position_ >= 8) {
      os_.put(static_cast<char>(byte_));
      byte_ = 0;
      position_ += 8;
      continue;
    }
    ++position_;
    if (position_ % 8 == 0) {
      os_.put(static_cast<char>(byte_));
      byte_ = 0;
    }
  }
}

void BitsetWriter::mark(u64 value) {
  if (value < base_ || value - base_ >= length_) throw std::out_of_range("bitset: value out of range");
  const u64 pos = value - base_;
  if (pos < position_) throw std::invalid_argument("bitset: values must be strictly increasing");
  advance_to(pos);
  byte_ |= static_cast<unsigned char>(1u << (pos % 8));
  advance_to(pos + 1);
}

void BitsetWriter::finish() {
  if (finished_) return;
  finished_ = true;
  advance_to(length_);
  if (length_ % 8 != 0) os_.put(static_cast<char>(byte_));
}

}  // namespace cubicsieve
