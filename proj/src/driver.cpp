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

#include "cubicsieve/driver.hpp"

#include <cmath>
#include <deque>
#include <future>
#include <utility>

#include "cubicsieve/classic_sieve.hpp"

namespace cubicsieve {

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "classic") return Engine::classic;
  if (name == "cubic") return Engine::cubic;
  if (name == "auto") return Engine::automatic;
  return std::nullopt;
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::classic: return "classic";
    case Engine::cubic: return "cubic";
    case Engine::automatic: return "auto";
  }
  return "?";
}

u64 default_delta(u64 x) {
  if (x < 3) return 1;
  const long double lx = static_cast<long double>(x);
  const long double d = std::cbrt(lx) * std::pow(std::log(lx), 2.0L / 3.0L);
  return static_cast<u64>(std::ceil(d));
}

ChunkPlan make_chunk_plan(u64 limit, const DriverOptions& opts, bool factoring) {
  if (limit < 2) throw ConfigError("limit must be at least 2");
  if (opts.k_den == 0) throw ConfigError("K has zero denominator");
  ChunkPlan plan;
  plan.limit = limit;
  plan.delta = opts.delta != 0 ? opts.delta : default_delta(limit);
  plan.engine = opts.engine;

  for (u64 lo = 2; lo <= limit;) {
    const u64 remaining = limit - lo + 1;
    const u64 half = remaining >= 2 * plan.delta + 1 ? plan.delta : (remaining - 1) / 2;
    Chunk c{lo + half, half, false};
    if (opts.engine != Engine::classic) {
      const SieveConfig cfg{c.center, c.half_width, opts.k_num, opts.k_den};
      c.cubic = cfg.valid() && (!factoring || cfg.low() >= 2);
      if (c.cubic && opts.engine == Engine::automatic) {
        const wide_uint cut = cfg.small_cutoff();
        c.cubic = cut * cut < static_cast<wide_uint>(cfg.high());
      }
    }
    plan.chunks.push_back(c);
    if (c.high() == limit) break;
    lo = c.high() + 1;
  }
  return plan;
}

namespace {

// Computes chunks (possibly concurrently) and hands results to `deliver`
// strictly in chunk order. At most `jobs` chunks are in flight.
template <class Result, class Compute, class Deliver>
SieveStats run_chunks(const ChunkPlan& plan, unsigned jobs, Compute&& compute, Deliver&& deliver) {
  SieveStats total;
  if (jobs <= 1) {
    for (const Chunk& c : plan.chunks) {
      SieveStats s;
      Result r = compute(c, s);
      total.merge(s);
      deliver(r);
    }
    return total;
  }
  using Item = std::pair<Result, SieveStats>;
  std::deque<std::future<Item>> in_flight;
  std::size_t next = 0;
  auto launch = [&] {
    const Chunk c = plan.chunks[next++];
    in_flight.push_back(std::async(std::launch::async, [c, &compute] {
      SieveStats s;
      Result r = compute(c, s);
      return Item{std::move(r), s};
    }));
  };
  while (next < plan.chunks.size() || !in_flight.empty()) {
    while (next < plan.chunks.size() && in_flight.size() < jobs) launch();
    Item item = in_flight.front().get();
    in_flight.pop_front();
    total.merge(item.second);
    deliver(item.first);
  }
  return total;
}

SieveConfig chunk_config(const Chunk& c, const DriverOptions& opts) {
  return SieveConfig{c.center, c.half_width, opts.k_num, opts.k_den};
}

}  // namespace

SieveStats primes_up_to(u64 limit, const PrimeSink& sink, const DriverOptions& opts) {
  const ChunkPlan plan = make_chunk_plan(limit, opts);
  return run_chunks<std::vector<u64>>(
      plan, opts.jobs,
      [&opts](const Chunk& c, SieveStats& s) {
        if (c.cubic) return new_seg_siev(chunk_config(c, opts), &s).values();
        MemoryMeter meter;
        auto primes = seg_siev(c.low(), 2 * c.half_width, &meter).values();
        s.peak_bits = meter.peak;
        return primes;
      },
      [&sink](const std::vector<u64>& primes) { sink(primes); });
}

SieveStats factor_up_to(u64 limit, const FactorSink& sink, const DriverOptions& opts) {
  const ChunkPlan plan = make_chunk_plan(limit, opts, true);
  return run_chunks<FactorTable>(
      plan, opts.jobs,
      [&opts](const Chunk& c, SieveStats& s) {
        if (c.cubic) return new_seg_siev_fac(chunk_config(c, opts), &s);
        MemoryMeter meter;
        FactorTable t = seg_siev_fac(c.low(), 2 * c.half_width, &meter);
        s.peak_bits = meter.peak;
        return t;
      },
      [&sink](const FactorTable& t) { sink(t); });
}

MertensResult mertens(u64 limit, const DriverOptions& opts,
                      const std::function<void(u64, int)>& mu_sink) {
  if (limit < 1) throw ConfigError("limit must be at least 1");
  MertensAccumulator acc;
  acc.push(1);
  if (mu_sink) mu_sink(1, 1);
  MertensResult result;
  if (limit >= 2) {
    const ChunkPlan plan = make_chunk_plan(limit, opts);
    result.stats = run_chunks<std::vector<int>>(
        plan, opts.jobs,
        [&opts](const Chunk& c, SieveStats& s) {
          if (c.cubic) return mobius_segment(chunk_config(c, opts), &s);
          MemoryMeter meter;
          auto mu = seg_siev_mobius(c.low(), 2 * c.half_width, &meter);
          s.peak_bits = meter.peak;
          return mu;
        },
        [&](const std::vector<int>& mu) {
          for (int v : mu) {
            acc.push(v);
            if (mu_sink) mu_sink(acc.x, v);
          }
        });
  }
  result.sum = acc.sum;
  result.violations = std::move(acc.violations);
  return result;
}

}  // namespace cubicsieve
