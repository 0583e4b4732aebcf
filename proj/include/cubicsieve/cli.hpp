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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cubicsieve/driver.hpp"
#include "cubicsieve/sieve_types.hpp"

namespace cubicsieve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

inline constexpr const char* kBenchCsvHeader =
    "engine,n,delta,k,wall_s,blocks,candidates,hits,false_alarms,peak_bits";

/// One measured run.
struct RunReport {
  std::string engine;
  u64 n = 0;
  u64 delta = 0;
  std::string k;
  u64 limit = 0;
  SieveStats stats;
  double wall_s = 0;
  u64 count = 0;
  u64 first = 0;
  u64 last = 0;

  /// candidates / (delta * ln n)
  [[nodiscard]] double work_ratio() const;
  [[nodiscard]] std::string csv_row() const;
};

/// Parses K given as "3", "5/2" or "2.5" into a reduced fraction.
/// Returns false on malformed input.
bool parse_k(const std::string& text, u64& num, u64& den);

/// Entry point shared by the executable and the tests. argv[0] is the
/// program name. Returns 0 on success, 2 on usage errors and 3 when the
/// cubic sieve's preconditions are not met.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubicsieve::cli
