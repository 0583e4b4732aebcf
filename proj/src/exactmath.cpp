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

#include "cubicsieve/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cubicsieve {

namespace {

wide_uint abs_wide(wide_int v) {
  return v < 0 ? wide_uint(0) - static_cast<wide_uint>(v) : static_cast<wide_uint>(v);
}

}  // namespace

wide_uint gcd(wide_uint a, wide_uint b) {
  // Fall back to 64-bit division as soon as both operands fit.
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      u64 x = static_cast<u64>(a), y = static_cast<u64>(b);
      while (y != 0) {
        u64 t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    wide_uint t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational::Rational(wide_int num, wide_int den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const wide_uint g = gcd(abs_wide(num), static_cast<wide_uint>(den));
  num_ = num / static_cast<wide_int>(g);
  den_ = den / static_cast<wide_int>(g);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << to_string(r.num()) << '/' << to_string(r.den());
}

wide_int floor_div(wide_int num, wide_int den) {
  wide_int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

wide_int mod_floor(wide_int a, wide_int m) {
  wide_int r = a % m;
  return r < 0 ? r + m : r;
}

u64 isqrt(u64 x) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  // sqrt of a rounded double can be off by one in either direction.
  while (r > 0 && static_cast<wide_uint>(r) * r > x) --r;
  while (static_cast<wide_uint>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

u64 isqrt(wide_uint x) {
  if ((x >> 64) == 0) return isqrt(static_cast<u64>(x));
  if (x >> 126) {
    // Result exceeds what the long-double seed can position reliably; bisect.
    u64 lo = u64(1) << 63, hi = ~u64(0);
    while (lo < hi) {
      const u64 mid = lo + (hi - lo + 1) / 2;
      if (static_cast<wide_uint>(mid) * mid <= x) lo = mid; else hi = mid - 1;
    }
    return lo;
  }
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
  while (static_cast<wide_uint>(r) * r > x) --r;
  while (static_cast<wide_uint>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

u64 icbrt_ceil(u64 x) {
  auto c = static_cast<u64>(std::cbrt(static_cast<double>(x)));
  auto cube = [](u64 v) { return static_cast<wide_uint>(v) * v * v; };
  while (c > 0 && cube(c - 1) >= x) --c;
  while (cube(c) < x) ++c;
  return c;
}

Rational frac_part(wide_int num, wide_int den) {
  if (den < 1) throw std::domain_error("frac_part: denominator must be positive");
  return Rational(mod_floor(num, den), den);
}

wide_int floor_scaled(const Rational& alpha, wide_int q, bool round_half) {
  if (!alpha.in_unit_interval()) throw std::domain_error("floor_scaled: alpha outside [0,1)");
  if (q < 1) throw std::domain_error("floor_scaled: q must be positive");
  if (round_half) return floor_div(2 * alpha.num() * q + alpha.den(), 2 * alpha.den());
  return floor_div(alpha.num() * q, alpha.den());
}

std::string to_string(wide_uint v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(wide_int v) {
  if (v < 0) return "-" + to_string(abs_wide(v));
  return to_string(static_cast<wide_uint>(v));
}

}  // namespace cubicsieve
