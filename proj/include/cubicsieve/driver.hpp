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

/// @file driver.hpp
/// @brief Full-range runs over [1, N], split into chunks of length 2*delta + 1
/// and streamed to a sink in ascending order.
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cubicsieve/cubic_sieve.hpp"
#include "cubicsieve/sieve_types.hpp"

namespace cubicsieve {

enum class Engine { classic, cubic, automatic };

std::optional<Engine> parse_engine(std::string_view name);
std::string_view engine_name(Engine e);

struct Chunk {
  u64 center = 0;
  u64 half_width = 0;
  bool cubic = false;

  [[nodiscard]] u64 low() const { return center - half_width; }
  [[nodiscard]] u64 high() const { return center + half_width; }
};

struct ChunkPlan {
  u64 limit = 0;
  u64 delta = 0;
  Engine engine = Engine::automatic;
  std::vector<Chunk> chunks;
};

struct DriverOptions {
  u64 delta = 0;  // 0 selects default_delta(limit)
  u64 k_num = 3;
  u64 k_den = 1;
  Engine engine = Engine::automatic;
  unsigned jobs = 1;  // chunks computed concurrently, delivered in order
};

/// ceil(x^(1/3) (ln x)^(2/3)), the chunk half-width that balances space and time.
u64 default_delta(u64 x);

/// Partition of [2, limit] into centered chunks. The last chunks shrink
/// rather than overshoot the limit. A chunk is marked cubic when the engine
/// allows it and its configuration passes validation (for factoring, also
/// low() >= 2); `automatic` additionally requires floor(K delta)^2 < high(),
/// i.e. at least one block of large divisors.
ChunkPlan make_chunk_plan(u64 limit, const DriverOptions& opts, bool factoring = false);

using PrimeSink = std::function<void(std::span<const u64>)>;
using FactorSink = std::function<void(const FactorTable&)>;

/// Streams every prime <= limit, ascending, one batch per chunk. limit >= 2.
SieveStats primes_up_to(u64 limit, const PrimeSink& sink, const DriverOptions& opts = {});

/// Streams the factorization of every 2 <= n <= limit, one table per chunk.
SieveStats factor_up_to(u64 limit, const FactorSink& sink, const DriverOptions& opts = {});

struct MertensAccumulator {
  u64 x = 0;
  i64 sum = 0;
  std::vector<u64> violations;  // x with |sum| > sqrt(x)

  void push(int mu) {
    ++x;
    sum += mu;
    if (static_cast<wide_int>(sum) * sum > static_cast<wide_int>(x)) violations.push_back(x);
  }
};

struct MertensResult {
  i64 sum = 0;
  std::vector<u64> violations;
  SieveStats stats;
};

/// sum_{n <= limit} mu(n) and every x <= limit where |M(x)| > sqrt(x). limit >= 1.
/// If `mu_sink` is set it receives mu(n) for n = 1, 2, ... in order.
MertensResult mertens(u64 limit, const DriverOptions& opts = {},
                      const std::function<void(u64, int)>& mu_sink = {});

}  // namespace cubicsieve
