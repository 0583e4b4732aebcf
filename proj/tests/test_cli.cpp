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

#include <sstream>

#include "cubicsieve/bitset_io.hpp"
#include "cubicsieve/classic_sieve.hpp"
#include "cubicsieve/cli.hpp"

using namespace cubicsieve;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cubicsieve");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("primes count and listing") {
  CHECK(run({"primes", "--limit", "100", "--format", "count"}).out == "25\n");
  const Result r = run({"primes", "--center", "1000000", "--delta", "100"});
  CHECK(r.code == cli::kExitOk);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 14);
  CHECK(l.front() == "999907");
  CHECK(l.back() == "1000099");
}

TEST_CASE("engines print identical output") {
  for (const char* center : {"1000000", "123456789012", "999999999999"}) {
    const Result cubic = run({"primes", "--center", center, "--delta", "20000", "--engine", "cubic"});
    const Result classic = run({"primes", "--center", center, "--delta", "20000", "--engine", "classic"});
    CHECK(cubic.code == 0);
    CHECK(cubic.out == classic.out);
  }
  CHECK(run({"primes", "--limit", "200000", "--engine", "cubic", "--jobs", "3"}).out ==
        run({"primes", "--limit", "200000", "--engine", "classic"}).out);
}

TEST_CASE("exit codes") {
  const Result pre = run({"primes", "--center", "1000000", "--delta", "50", "--engine", "cubic"});
  CHECK(pre.code == cli::kExitPrecondition);
  CHECK(pre.err.find("error:") != std::string::npos);
  CHECK(run({"primes"}).code == cli::kExitUsage);
  CHECK(run({"primes", "--limit", "10", "--center", "5", "--delta", "1"}).code == cli::kExitUsage);
  CHECK(run({"primes", "--limit", "abc"}).code == cli::kExitUsage);
  CHECK(run({"primes", "--limit", "10", "--k", "2", "--engine", "cubic"}).code == cli::kExitPrecondition);
  CHECK(run({"primes", "--limit", "10", "--k", "two"}).code == cli::kExitUsage);
  CHECK(run({"primes", "--limit", "10", "--engine", "fast"}).code == cli::kExitUsage);
  CHECK(run({"nosuch"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
  // The classic engine has no precondition on delta.
  CHECK(run({"primes", "--center", "1000000", "--delta", "50", "--engine", "classic"}).code == 0);
}

TEST_CASE("factor output") {
  const auto l = lines(run({"factor", "--center", "10", "--delta", "2"}).out);
  CHECK(l == std::vector<std::string>{"8 = 2^3", "9 = 3^2", "10 = 2 * 5", "11 = 11", "12 = 2^2 * 3"});
  const auto big = lines(run({"factor", "--center", "101", "--delta", "0"}).out);
  CHECK(big == std::vector<std::string>{"101 = 101"});
  const auto range = lines(run({"factor", "--limit", "12"}).out);
  REQUIRE(range.size() == 11);
  CHECK(range.front() == "2 = 2");
  CHECK(range.back() == "12 = 2^2 * 3");
}

TEST_CASE("mobius and mertens") {
  CHECK(lines(run({"mobius", "--center", "30", "--delta", "2"}).out) ==
        std::vector<std::string>{"0", "-1", "-1", "-1", "0"});
  CHECK(lines(run({"mobius", "--limit", "5"}).out) ==
        std::vector<std::string>{"1", "-1", "-1", "0", "-1"});
  CHECK(run({"mertens", "--limit", "10000"}).out == "-23\n");
  const Result rep = run({"mertens", "--limit", "1000000", "--report"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("violations: none") != std::string::npos);
}

TEST_CASE("bitset dump round trips") {
  const Result r = run({"primes", "--center", "1000000", "--delta", "1000", "--format", "bits"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.size() == kBitsetHeaderSize + (2001 + 7) / 8);
  std::istringstream is(r.out);
  const SieveBits bits = read_bitset(is);
  CHECK(bits == seg_siev(999000, 2000));

  const Result lim = run({"primes", "--limit", "1000", "--format", "bits", "--engine", "cubic"});
  std::istringstream is2(lim.out);
  const SieveBits b2 = read_bitset(is2);
  CHECK(b2.base() == 1);
  CHECK(b2.size() == 1000);
  CHECK(b2 == simple_siev(1000));

  std::istringstream bad(std::string(10, 'x'));
  CHECK_THROWS_AS(read_bitset(bad), std::runtime_error);
}

TEST_CASE("bench csv") {
  const Result r = run({"bench", "--n", "1000000000,1000000000000", "--engine", "classic,cubic"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 5);
  CHECK(l[0] == cli::kBenchCsvHeader);
  CHECK(l[1].rfind("classic,1000000000,", 0) == 0);
  CHECK(l[2].rfind("cubic,1000000000,", 0) == 0);
  const Result text = run({"bench", "--n", "1000000000", "--format", "text"});
  CHECK(text.out.find("first=") != std::string::npos);
  CHECK(text.out.find("first=0 ") == std::string::npos);
  CHECK(run({"bench", "--random", "3", "--seed", "7"}).code == 0);
}

TEST_CASE("parse_k") {
  u64 num = 0, den = 0;
  CHECK(cli::parse_k("3", num, den));
  CHECK((num == 3 && den == 1));
  CHECK(cli::parse_k("5/2", num, den));
  CHECK((num == 5 && den == 2));
  CHECK(cli::parse_k("2.5", num, den));
  CHECK((num == 5 && den == 2));
  CHECK(cli::parse_k("6/4", num, den));
  CHECK((num == 3 && den == 2));
  CHECK_FALSE(cli::parse_k("x", num, den));
  CHECK_FALSE(cli::parse_k("3/0", num, den));
  CHECK_FALSE(cli::parse_k("", num, den));
}
