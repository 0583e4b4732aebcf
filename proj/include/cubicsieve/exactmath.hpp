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

/// @file exactmath.hpp
/// @brief Exact integer and rational arithmetic at twice the machine word.
///
/// Values handled by the sieves are bounded by n + delta < 2^64. Every
/// intermediate of the Diophantine step (numerators, denominators up to
/// m0^2, convergent products) fits in 128 bits.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cubicsieve {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using wide_int = __int128;
using wide_uint = unsigned __int128;

/// Exact fraction num/den, always stored in lowest terms with den > 0.
class Rational {
public:
  constexpr Rational() = default;

  /// Normalizes sign and common factors. Throws std::domain_error if den == 0.
  Rational(wide_int num, wide_int den);

  static Rational integer(wide_int value) { return Rational(value, 1); }

  [[nodiscard]] constexpr wide_int num() const { return num_; }
  [[nodiscard]] constexpr wide_int den() const { return den_; }

  [[nodiscard]] bool in_unit_interval() const { return num_ >= 0 && num_ < den_; }

  friend bool operator==(const Rational&, const Rational&) = default;

private:
  wide_int num_ = 0;
  wide_int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

wide_uint gcd(wide_uint a, wide_uint b);

/// Floor division for signed operands, den > 0.
wide_int floor_div(wide_int num, wide_int den);

/// Non-negative residue of a modulo m, m > 0.
wide_int mod_floor(wide_int a, wide_int m);

u64 isqrt(u64 x);
u64 isqrt(wide_uint x);

/// Smallest c with c^3 >= x.
u64 icbrt_ceil(u64 x);

/// {num/den}: the representative of num/den modulo 1 in [0, 1).
/// Throws std::domain_error unless den >= 1.
Rational frac_part(wide_int num, wide_int den);

/// floor(alpha * q), or floor(alpha * q + 1/2) when round_half is set.
/// Requires alpha in [0, 1) and q >= 1.
wide_int floor_scaled(const Rational& alpha, wide_int q, bool round_half);

std::string to_string(wide_int v);
std::string to_string(wide_uint v);

}  // namespace cubicsieve
