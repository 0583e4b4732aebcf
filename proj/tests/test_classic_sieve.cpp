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

#include <doctest.h>

#include "cubicsieve/classic_sieve.hpp"
#include "oracles.hpp"

using namespace cubicsieve;

namespace {

std::vector<u64> trial_primes(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 v = lo; v <= hi; ++v)
    if (oracle::is_prime(v)) out.push_back(v);
  return out;
}

// Survivors of sieving [n, n + delta] by primes <= bound, by trial division.
std::vector<u64> trial_survivors(u64 n, u64 delta, u64 bound) {
  std::vector<u64> out;
  for (u64 v = n; v <= n + delta; ++v) {
    if (v < 2) continue;
    bool struck = false;
    for (u64 d = 2; d <= bound && d < v; ++d)
      if (v % d == 0 && oracle::is_prime(d)) {
        struck = true;
        break;
      }
    if (!struck) out.push_back(v);
  }
  return out;
}

void check_recomposition(const FactorTable& t, u64 bound) {
  for (u64 j = 0; j < t.size(); ++j) {
    const auto f = t.factors(j);
    u64 prev = 0;
    for (const auto& pp : f) {
      REQUIRE(pp.prime > prev);
      REQUIRE(pp.exponent >= 1);
      prev = pp.prime;
    }
    const u64 smooth = oracle::recompose({f.begin(), f.end()});
    REQUIRE(smooth == t.smooth(j));
    REQUIRE(t.value(j) % smooth == 0);
    const u64 cofactor = t.value(j) / smooth;
    if (cofactor > 1) REQUIRE(cofactor > bound);
    for (u64 d = 2; d <= bound && d * d <= cofactor; ++d) REQUIRE(cofactor % d != 0);
  }
}

}  // namespace

TEST_CASE("simple_siev small cases") {
  CHECK(simple_siev(30).values() == trial_primes(1, 30));
  CHECK(simple_siev(30).values() == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(simple_siev(2).values() == std::vector<u64>{2});
  CHECK(simple_siev(1).values().empty());
  CHECK(simple_siev(30).base() == 1);
}

TEST_CASE("simple_siev counts match trial division") {
  for (u64 n : {u64(63), u64(64), u64(65), u64(127), u64(1000), u64(4097), u64(100000)}) {
    CAPTURE(n);
    CHECK(simple_siev(n).count() == trial_primes(1, n).size());
  }
  // pi(10^6): recomputed by trial division, then frozen.
  const u64 pi_1e6 = trial_primes(1, 1000000).size();
  CHECK(pi_1e6 == 78498);
  CHECK(simple_siev(1000000).count() == 78498);
}

TEST_CASE("simple_seg_siev examples") {
  const SieveBits s = simple_seg_siev(0, 10, 3);
  CHECK(s.values() == std::vector<u64>{2, 3, 5, 7});
  CHECK(simple_seg_siev(100, 10, 10).values() == std::vector<u64>{101, 103, 107, 109});
  CHECK(simple_seg_siev(100, 10, 10).values() == trial_survivors(100, 10, 10));
  // With the bound past sqrt(n + delta) the survivors are the primes.
  CHECK(simple_seg_siev(1000, 500, 40).values() == trial_primes(1000, 1500));
}

TEST_CASE("sub_seg_siev matches simple_seg_siev bit for bit") {
  for (int i = 0; i < 1000; ++i) {
    const u64 n = oracle::uniform(0, 100000);
    const u64 delta = oracle::uniform(0, 300);
    const u64 bound = oracle::uniform(2, 2000);
    CAPTURE(n);
    CAPTURE(delta);
    CAPTURE(bound);
    REQUIRE(sub_seg_siev(n, delta, bound) == simple_seg_siev(n, delta, bound));
  }
}

TEST_CASE("sub_seg_siev against trial division") {
  CHECK(sub_seg_siev(1000000, 1000, 1000).values() == trial_survivors(1000000, 1000, 1000));
  const SieveBits s = sub_seg_siev(0, 10, 2);
  CHECK(s.values() == std::vector<u64>{2, 3, 5, 7, 9});
  // max_prime itself is prime and still sieves.
  CHECK(sub_seg_siev(20, 10, 7).values() == trial_survivors(20, 10, 7));
}

TEST_CASE("blockwise prime generation visits each prime once") {
  for (u64 bound : {u64(2), u64(3), u64(4), u64(9), u64(10), u64(97), u64(1024), u64(99991), u64(100000)}) {
    std::vector<u64> seen;
    for_each_prime_blockwise(bound, [&](u64 p) { seen.push_back(p); });
    CAPTURE(bound);
    CHECK(seen == trial_primes(1, bound));
  }
  for (int i = 0; i < 200; ++i) {
    const u64 bound = oracle::uniform(2, 100000);
    std::vector<u64> seen;
    for_each_prime_blockwise(bound, [&](u64 p) { seen.push_back(p); });
    REQUIRE(seen == simple_siev(bound).values());
  }
}

TEST_CASE("seg_siev examples") {
  CHECK(seg_siev(999900, 200).values() ==
        std::vector<u64>{999907, 999917, 999931, 999953, 999959, 999961, 999979, 999983, 1000003,
                         1000033, 1000037, 1000039, 1000081, 1000099});
  CHECK(seg_siev(999900, 200).values() == trial_primes(999900, 1000100));
  CHECK(seg_siev(0, 100).count() == 25);
  CHECK(seg_siev(0, 100).values() == trial_primes(0, 100));
  const SieveBits single = seg_siev(1000003, 0);
  CHECK(single.size() == 1);
  CHECK(single.count() == 1);
  CHECK(seg_siev(1, 0).count() == 0);
}

TEST_CASE("seg_siev equals the restriction of simple_siev") {
  const SieveBits full = simple_siev(1000000);
  for (int i = 0; i < 300; ++i) {
    const u64 n = oracle::uniform(1, 990000);
    const u64 delta = oracle::uniform(0, 9999);
    const SieveBits s = seg_siev(n, delta);
    for (u64 j = 0; j <= delta; ++j) REQUIRE(s.test(j) == full.test(n + j - 1));
  }
}

TEST_CASE("sub_seg_siev_fac hand example") {
  const FactorTable t = sub_seg_siev_fac(8, 4, 3);
  CHECK(t.factors(0)[0] == PrimePower{2, 3});
  CHECK(t.factors(1)[0] == PrimePower{3, 2});
  CHECK(t.factors(2).size() == 1);
  CHECK(t.factors(2)[0] == PrimePower{2, 1});
  CHECK(t.factors(3).empty());
  CHECK(t.smooth(3) == 1);
  CHECK(t.factors(4).size() == 2);
  CHECK(t.factors(4)[0] == PrimePower{2, 2});
  CHECK(t.factors(4)[1] == PrimePower{3, 1});
  CHECK(t.smooth(0) == 8);
  CHECK(t.smooth(1) == 9);
  CHECK(t.smooth(2) == 2);
  CHECK(t.smooth(4) == 12);
  check_recomposition(t, 3);
}

TEST_CASE("sub_seg_siev_fac against trial division") {
  for (int i = 0; i < 20; ++i) {
    const u64 n = oracle::uniform(1000000, 1000000000);
    const u64 delta = 1000;
    const u64 bound = isqrt(n + delta);
    const FactorTable t = sub_seg_siev_fac(n, delta, bound);
    check_recomposition(t, bound);
    for (u64 j = 0; j <= delta; j += 37) {
      const auto expect = oracle::factorize_below(n + j, bound);
      const auto f = t.factors(j);
      REQUIRE(Factorization(f.begin(), f.end()) == expect);
    }
  }
}

TEST_CASE("seg_siev_fac examples") {
  const FactorTable t = seg_siev_fac(100, 5);
  CHECK(Factorization(t.factors(1).begin(), t.factors(1).end()) == Factorization{{101, 1}});
  CHECK(Factorization(t.factors(2).begin(), t.factors(2).end()) ==
        Factorization{{2, 1}, {3, 1}, {17, 1}});
  CHECK(Factorization(t.factors(4).begin(), t.factors(4).end()) == Factorization{{2, 3}, {13, 1}});
  for (u64 j = 0; j < t.size(); ++j) CHECK(oracle::recompose({t.factors(j).begin(), t.factors(j).end()}) == t.value(j));
  const FactorTable one = seg_siev_fac(1, 3);
  CHECK(one.factors(0).empty());
}

TEST_CASE("seg_siev_fac near 10^12 matches trial division") {
  for (int i = 0; i < 300; ++i) {
    const u64 n = oracle::uniform(999000000000ULL, 1001000000000ULL);
    const u64 delta = oracle::uniform(0, 3);
    const FactorTable t = seg_siev_fac(n, delta);
    for (u64 j = 0; j <= delta; ++j) {
      const auto f = t.factors(j);
      REQUIRE(Factorization(f.begin(), f.end()) == oracle::factorize(n + j));
      REQUIRE(t.smooth(j) == n + j);
    }
  }
}

TEST_CASE("seg_siev_mobius matches the definition") {
  const auto mu = seg_siev_mobius(1, 2000);
  for (u64 v = 1; v <= 2001; ++v) REQUIRE(mu[v - 1] == oracle::mobius(v));
  CHECK(mu[3] == 0);
  CHECK(mu[5] == 1);
  CHECK(mu[29] == -1);
}

TEST_CASE("memory meter sees the O(sqrt(M) + delta) working set") {
  MemoryMeter meter;
  sub_seg_siev(1000000000, 10000, 1000000, &meter);
  CHECK(meter.peak > 10000);
  CHECK(meter.peak < 10000 + 64 * 2000 + 64 * 100);
  CHECK(meter.live >= 10001);
}
