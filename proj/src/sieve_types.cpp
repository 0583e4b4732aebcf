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

#include "cubicsieve/sieve_types.hpp"

namespace cubicsieve {

SieveBits::SieveBits(u64 base, u64 size, bool value)
    : base_(base), size_(size), words_((size + 63) / 64, value ? ~u64(0) : u64(0)) {
  clear_tail();
}

void SieveBits::clear_tail() {
  const u64 tail = size_ & 63;
  if (tail != 0) words_.back() &= (u64(1) << tail) - 1;
}

u64 SieveBits::count() const {
  u64 c = 0;
  for (u64 w : words_) c += static_cast<u64>(std::popcount(w));
  return c;
}

std::vector<u64> SieveBits::values() const {
  std::vector<u64> out;
  for_each_set([&](u64 v) { out.push_back(v); });
  return out;
}

FactorTable::FactorTable(u64 base, u64 size) : base_(base), factors_(size), smooth_(size, 1) {}

void FactorTable::record(u64 j, u64 p, u64 e) {
  auto& f = factors_[j];
  auto pos = std::lower_bound(f.begin(), f.end(), p,
                              [](const PrimePower& pp, u64 v) { return pp.prime < v; });
  f.insert(pos, PrimePower{p, e});
  for (u64 i = 0; i < e; ++i) smooth_[j] *= p;
}

bool FactorTable::finish(u64 j) {
  const u64 v = value(j);
  if (smooth_[j] == v) return false;
  factors_[j].push_back({v / smooth_[j], 1});
  smooth_[j] = v;
  return true;
}

u64 FactorTable::memory_bits() const {
  u64 bits = static_cast<u64>(smooth_.capacity()) * 64 +
             static_cast<u64>(factors_.capacity()) * sizeof(Factorization) * 8;
  for (const auto& f : factors_) bits += static_cast<u64>(f.capacity()) * sizeof(PrimePower) * 8;
  return bits;
}

MobiusTable::MobiusTable(u64 base, u64 size) : base_(base), smooth_(size, 1), state_(size, 0) {}

void MobiusTable::record(u64 j, u64 p, u64 e) {
  for (u64 i = 0; i < e; ++i) smooth_[j] *= p;
  if (e == 1) state_[j] ^= kOdd; else state_[j] |= kSquare;
}

bool MobiusTable::finish(u64 j) {
  const u64 v = base_ + j;
  if (smooth_[j] == v) return false;
  // The leftover is a single prime.
  smooth_[j] = v;
  state_[j] ^= kOdd;
  return true;
}

std::vector<int> MobiusTable::values() const {
  std::vector<int> out(size());
  for (u64 j = 0; j < size(); ++j) out[j] = mu(j);
  return out;
}

void SieveStats::merge(const SieveStats& other) {
  blocks += other.blocks;
  dioph_calls += other.dioph_calls;
  candidates += other.candidates;
  hits += other.hits;
  false_alarms += other.false_alarms;
  dioph_ns += other.dioph_ns;
  peak_bits = std::max(peak_bits, other.peak_bits);
}

}  // namespace cubicsieve
