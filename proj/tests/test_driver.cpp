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
#include "cubicsieve/driver.hpp"
#include "oracles.hpp"

using namespace cubicsieve;

namespace {

std::vector<u64> collect_primes(u64 limit, const DriverOptions& opts, SieveStats* stats = nullptr) {
  std::vector<u64> out;
  const SieveStats s = primes_up_to(
      limit, [&](std::span<const u64> batch) { out.insert(out.end(), batch.begin(), batch.end()); },
      opts);
  if (stats) *stats = s;
  return out;
}

DriverOptions with_engine(Engine e, u64 delta = 0, unsigned jobs = 1) {
  DriverOptions o;
  o.engine = e;
  o.delta = delta;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST_CASE("engine names round trip") {
  for (Engine e : {Engine::classic, Engine::cubic, Engine::automatic})
    CHECK(parse_engine(engine_name(e)) == e);
  CHECK_FALSE(parse_engine("fast").has_value());
}

TEST_CASE("default delta") {
  // ceil(100 * ln(10^6)^(2/3)) = ceil(575.9...), recomputed independently.
  CHECK(default_delta(1000000) == 576);
  CHECK(default_delta(2) == 1);
}

TEST_CASE("chunk plans partition [2, N]") {
  for (int i = 0; i < 500; ++i) {
    const u64 limit = oracle::uniform(2, 100000);
    const u64 delta = oracle::uniform(1, 500);
    for (Engine e : {Engine::classic, Engine::cubic, Engine::automatic}) {
      const ChunkPlan plan = make_chunk_plan(limit, with_engine(e, delta));
      u64 next = 2;
      for (const Chunk& c : plan.chunks) {
        REQUIRE(c.low() == next);
        REQUIRE(c.half_width <= delta);
        if (e == Engine::classic) REQUIRE_FALSE(c.cubic);
        if (c.cubic) REQUIRE(SieveConfig{c.center, c.half_width, 3, 1}.valid());
        next = c.high() + 1;
      }
      REQUIRE(next == limit + 1);
    }
  }
  CHECK_THROWS_AS(make_chunk_plan(1, {}), ConfigError);
}

TEST_CASE("primes up to 100") {
  const auto p = collect_primes(100, {});
  CHECK(p.size() == 25);
  CHECK(p.front() == 2);
  CHECK(p.back() == 97);
  CHECK(collect_primes(2, {}) == std::vector<u64>{2});
}

TEST_CASE("classic, cubic and auto agree up to 10^7") {
  const u64 limit = 10000000;
  const auto classic = collect_primes(limit, with_engine(Engine::classic));
  CHECK(classic.size() == 664579);
  CHECK(collect_primes(limit, with_engine(Engine::cubic)) == classic);
  CHECK(collect_primes(limit, with_engine(Engine::automatic)) == classic);
  // With delta = 500 the large-divisor blocks start at 1501 < sqrt(10^7).
  SieveStats stats;
  CHECK(collect_primes(limit, with_engine(Engine::cubic, 500), &stats) == classic);
  CHECK(stats.blocks > 0);
  CHECK(stats.consistent());
}

TEST_CASE("parallel chunks are delivered in order") {
  const auto serial = collect_primes(3000000, with_engine(Engine::cubic, 2000));
  SieveStats s1, s4;
  collect_primes(3000000, with_engine(Engine::cubic, 2000), &s1);
  CHECK(collect_primes(3000000, with_engine(Engine::cubic, 2000, 4), &s4) == serial);
  CHECK(s1.candidates == s4.candidates);
  CHECK(s1.blocks == s4.blocks);
}

TEST_CASE("factor_up_to small range") {
  std::vector<Factorization> got;
  factor_up_to(20, [&](const FactorTable& t) {
    for (u64 j = 0; j < t.size(); ++j) got.emplace_back(t.factors(j).begin(), t.factors(j).end());
  });
  REQUIRE(got.size() == 19);
  for (u64 v = 2; v <= 20; ++v) CHECK(got[v - 2] == oracle::factorize(v));
}

TEST_CASE("factor_up_to engines agree to 10^6") {
  auto run = [](Engine e) {
    std::vector<Factorization> out;
    factor_up_to(1000000, [&](const FactorTable& t) {
      for (u64 j = 0; j < t.size(); ++j) out.emplace_back(t.factors(j).begin(), t.factors(j).end());
    }, with_engine(e));
    return out;
  };
  const auto classic = run(Engine::classic);
  REQUIRE(classic.size() == 999999);
  CHECK(run(Engine::cubic) == classic);
  for (u64 v = 2; v <= 1000000; v += 9973) CHECK(classic[v - 2] == oracle::factorize(v));
}

TEST_CASE("Mertens function") {
  CHECK(mertens(1).sum == 1);
  CHECK(mertens(2).sum == 0);
  CHECK(mertens(10000).sum == -23);
  CHECK(mertens(10000, with_engine(Engine::cubic, 100)).sum == -23);
  const MertensResult r = mertens(1000000);
  CHECK(r.violations.empty());
  CHECK(r.sum == mertens(1000000, with_engine(Engine::classic)).sum);

  std::vector<int> mu;
  mertens(50, {}, [&](u64 x, int v) {
    REQUIRE(x == mu.size() + 1);
    mu.push_back(v);
  });
  for (u64 x = 1; x <= 50; ++x) CHECK(mu[x - 1] == oracle::mobius(x));
}

TEST_CASE("cubic per-chunk space does not grow with N") {
  // Fixed delta: the largest chunk's peak stays within the delta-only budget.
  const u64 delta = 5000;
  SieveStats small, large;
  collect_primes(10000000, with_engine(Engine::cubic, delta), &small);
  collect_primes(200000000, with_engine(Engine::cubic, delta, 4), &large);
  CHECK(large.peak_bits <= 2 * small.peak_bits);
}
