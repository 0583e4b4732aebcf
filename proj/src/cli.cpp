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

#include "cubicsieve/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "cubicsieve/bitset_io.hpp"
#include "cubicsieve/classic_sieve.hpp"
#include "cubicsieve/cubic_sieve.hpp"

namespace cubicsieve::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string k_text(u64 num, u64 den) {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

struct RangeArgs {
  std::optional<u64> center;
  std::optional<u64> delta;
  std::optional<u64> limit;
  std::string k = "3";
  std::string engine = "auto";
  unsigned jobs = 1;
};

void add_range_options(CLI::App* cmd, RangeArgs& a) {
  cmd->add_option("--center", a.center, "interval center n (sieves [n - delta, n + delta])");
  cmd->add_option("--delta", a.delta, "interval half-width");
  cmd->add_option("--limit", a.limit, "process the full range up to N");
  cmd->add_option("--k", a.k, "small-prime cutoff factor K >= 5/2 (e.g. 3, 5/2, 2.5)")
      ->capture_default_str();
  cmd->add_option("--engine", a.engine, "classic | cubic | auto")
      ->check(CLI::IsMember({"classic", "cubic", "auto"}))
      ->capture_default_str();
  cmd->add_option("--jobs", a.jobs, "chunks computed in parallel in --limit mode")
      ->envname("CUBICSIEVE_JOBS")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
}

// Resolved invocation: either a single centered interval or a full range.
struct Plan {
  bool centered = false;
  SieveConfig cfg;
  Engine engine = Engine::automatic;
  bool use_cubic = false;  // centered mode only
  u64 limit = 0;
  DriverOptions opts;
};

Plan resolve(const RangeArgs& a, u64 min_low, bool factoring) {
  Plan p;
  if (!parse_k(a.k, p.cfg.k_num, p.cfg.k_den)) throw UsageError("malformed --k: " + a.k);
  p.engine = *parse_engine(a.engine);
  p.opts.k_num = p.cfg.k_num;
  p.opts.k_den = p.cfg.k_den;
  p.opts.engine = p.engine;
  p.opts.jobs = a.jobs;

  const bool has_center = a.center || a.delta;
  if (has_center && a.limit) throw UsageError("use either --center/--delta or --limit, not both");
  if (!has_center && !a.limit) throw UsageError("one of --center/--delta or --limit is required");

  const bool k_ok = 2 * static_cast<wide_uint>(p.cfg.k_num) >= 5 * static_cast<wide_uint>(p.cfg.k_den);
  if (a.limit) {
    if (*a.limit < 2) throw UsageError("--limit must be at least 2");
    if (p.engine == Engine::cubic && !k_ok) throw ConfigError("K must be at least 5/2");
    p.limit = *a.limit;
    return p;
  }

  if (!a.center || !a.delta) throw UsageError("--center and --delta must be given together");
  p.centered = true;
  p.cfg.n = *a.center;
  p.cfg.delta = *a.delta;
  if (p.cfg.delta > p.cfg.n || p.cfg.n - p.cfg.delta < min_low)
    throw UsageError("interval start n - delta must be at least " + std::to_string(min_low));
  if (p.cfg.n > std::numeric_limits<u64>::max() - p.cfg.delta)
    throw UsageError("n + delta exceeds 64 bits");

  const auto cubic_ok = [&] { return p.cfg.valid() && (!factoring || p.cfg.low() >= 2); };
  switch (p.engine) {
    case Engine::classic: p.use_cubic = false; break;
    case Engine::cubic:
      p.cfg.validate();
      if (factoring && p.cfg.low() < 2) throw ConfigError("factoring needs n - delta >= 2");
      p.use_cubic = true;
      break;
    case Engine::automatic: p.use_cubic = cubic_ok(); break;
  }
  return p;
}

void print_factorization(std::ostream& out, u64 value, std::span<const PrimePower> factors) {
  out << value << " = ";
  if (factors.empty()) {
    out << value << '\n';
    return;
  }
  bool first = true;
  for (const auto& f : factors) {
    if (!first) out << " * ";
    first = false;
    out << f.prime;
    if (f.exponent != 1) out << '^' << f.exponent;
  }
  out << '\n';
}

void print_report(std::ostream& os, const RunReport& r) {
  os << "engine=" << r.engine;
  if (r.limit) os << " limit=" << r.limit; else os << " n=" << r.n << " delta=" << r.delta;
  os << " k=" << r.k << " wall_s=" << std::fixed << std::setprecision(6) << r.wall_s
     << std::defaultfloat << " count=" << r.count << " first=" << r.first << " last=" << r.last
     << " blocks=" << r.stats.blocks << " candidates=" << r.stats.candidates
     << " hits=" << r.stats.hits << " false_alarms=" << r.stats.false_alarms
     << " peak_bits=" << r.stats.peak_bits << '\n';
}

// --- primes ----------------------------------------------------------------

struct PrimesArgs {
  RangeArgs range;
  std::string format = "lines";
  bool stats = false;
};

int cmd_primes(const PrimesArgs& a, std::ostream& out, std::ostream& err) {
  const Plan p = resolve(a.range, 0, false);
  RunReport report;
  report.engine = std::string(engine_name(p.engine));
  report.k = k_text(p.cfg.k_num, p.cfg.k_den);
  const auto t0 = Clock::now();

  if (p.centered) {
    report.n = p.cfg.n;
    report.delta = p.cfg.delta;
    report.engine = p.use_cubic ? "cubic" : "classic";
    SieveBits bits;
    if (p.use_cubic) {
      bits = new_seg_siev(p.cfg, &report.stats);
    } else {
      MemoryMeter meter;
      bits = seg_siev(p.cfg.low(), 2 * p.cfg.delta, &meter);
      report.stats.peak_bits = meter.peak;
    }
    report.wall_s = seconds_since(t0);
    const auto primes = bits.values();
    report.count = primes.size();
    if (!primes.empty()) {
      report.first = primes.front();
      report.last = primes.back();
    }
    if (a.format == "lines") {
      for (u64 v : primes) out << v << '\n';
    } else if (a.format == "count") {
      out << primes.size() << '\n';
    } else {
      write_bitset(out, bits);
    }
  } else {
    report.limit = p.limit;
    std::optional<BitsetWriter> writer;
    if (a.format == "bits") writer.emplace(out, 1, p.limit);
    report.stats = primes_up_to(
        p.limit,
        [&](std::span<const u64> batch) {
          if (batch.empty()) return;
          if (report.count == 0) report.first = batch.front();
          report.last = batch.back();
          report.count += batch.size();
          if (a.format == "lines") {
            for (u64 v : batch) out << v << '\n';
          } else if (writer) {
            for (u64 v : batch) writer->mark(v);
          }
        },
        p.opts);
    if (writer) writer->finish();
    if (a.format == "count") out << report.count << '\n';
    report.wall_s = seconds_since(t0);
  }
  if (a.stats) print_report(err, report);
  return kExitOk;
}

// --- factor ----------------------------------------------------------------

int cmd_factor(const RangeArgs& a, std::ostream& out) {
  const Plan p = resolve(a, 1, true);
  if (p.centered) {
    const FactorTable table =
        p.use_cubic ? new_seg_siev_fac(p.cfg) : seg_siev_fac(p.cfg.low(), 2 * p.cfg.delta);
    for (u64 j = 0; j < table.size(); ++j) print_factorization(out, table.value(j), table.factors(j));
  } else {
    factor_up_to(
        p.limit,
        [&](const FactorTable& table) {
          for (u64 j = 0; j < table.size(); ++j)
            print_factorization(out, table.value(j), table.factors(j));
        },
        p.opts);
  }
  return kExitOk;
}

// --- mobius / mertens ----------------------------------------------------

int cmd_mobius(const RangeArgs& a, std::ostream& out) {
  const Plan p = resolve(a, 1, false);
  if (p.centered) {
    const std::vector<int> mu =
        p.use_cubic ? mobius_segment(p.cfg) : seg_siev_mobius(p.cfg.low(), 2 * p.cfg.delta);
    for (int v : mu) out << v << '\n';
  } else {
    mertens(p.limit, p.opts, [&](u64, int v) { out << v << '\n'; });
  }
  return kExitOk;
}

struct MertensArgs {
  RangeArgs range;
  bool report = false;
};

int cmd_mertens(const MertensArgs& a, std::ostream& out) {
  if (a.range.center || a.range.delta) throw UsageError("mertens takes --limit only");
  RangeArgs range = a.range;
  if (!range.limit) throw UsageError("--limit is required");
  if (*range.limit < 1) throw UsageError("--limit must be at least 1");
  const u64 limit = *range.limit;

  DriverOptions opts;
  if (!parse_k(range.k, opts.k_num, opts.k_den)) throw UsageError("malformed --k: " + range.k);
  opts.engine = *parse_engine(range.engine);
  opts.jobs = range.jobs;
  const MertensResult r = mertens(limit, opts);
  if (!a.report) {
    out << r.sum << '\n';
    return kExitOk;
  }
  out << "M(" << limit << ") = " << r.sum << '\n';
  out << "checked |M(x)| <= sqrt(x) for 1 <= x <= " << limit << '\n';
  if (r.violations.empty()) {
    out << "violations: none\n";
  } else {
    out << "violations: " << r.violations.size() << '\n';
    for (u64 x : r.violations) out << "  x = " << x << '\n';
  }
  return kExitOk;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::vector<u64> n;
  std::vector<u64> delta;
  std::string k = "3";
  std::vector<std::string> engines{"classic", "cubic"};
  std::string format = "csv";
  u64 random = 0;
  u64 seed = 1;
  u64 n_min = 1'000'000;
  u64 n_max = 1'000'000'000'000ULL;
};

RunReport bench_one(Engine engine, u64 n, u64 delta, u64 k_num, u64 k_den) {
  RunReport r;
  r.engine = std::string(engine_name(engine));
  r.n = n;
  r.delta = delta;
  r.k = k_text(k_num, k_den);
  const SieveConfig cfg{n, delta, k_num, k_den};
  const auto t0 = Clock::now();
  SieveBits bits;
  if (engine == Engine::cubic) {
    bits = new_seg_siev(cfg, &r.stats);
  } else {
    MemoryMeter meter;
    bits = seg_siev(cfg.low(), 2 * delta, &meter);
    r.stats.peak_bits = meter.peak;
  }
  r.wall_s = seconds_since(t0);
  r.count = bits.count();
  bits.for_each_set([&](u64 v) {
    if (r.first == 0) r.first = v;
    r.last = v;
  });
  return r;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  u64 k_num = 0, k_den = 0;
  if (!parse_k(a.k, k_num, k_den)) throw UsageError("malformed --k: " + a.k);
  std::vector<Engine> engines;
  for (const auto& e : a.engines) {
    auto parsed = parse_engine(e);
    if (!parsed || *parsed == Engine::automatic) throw UsageError("bench engines: classic, cubic");
    engines.push_back(*parsed);
  }

  std::vector<std::pair<u64, u64>> runs;
  if (!a.delta.empty() && a.delta.size() != 1 && a.delta.size() != a.n.size())
    throw UsageError("--delta takes one value or one per --n");
  for (std::size_t i = 0; i < a.n.size(); ++i) {
    const u64 n = a.n[i];
    const u64 d = a.delta.empty() ? default_delta(n) : a.delta.size() == 1 ? a.delta[0] : a.delta[i];
    runs.emplace_back(n, d);
  }
  if (a.random > 0) {
    if (a.n_min < 8 || a.n_min > a.n_max) throw UsageError("need 8 <= --n-min <= --n-max");
    std::mt19937_64 rng(a.seed);
    std::uniform_real_distribution<double> log_n(std::log(static_cast<double>(a.n_min)),
                                                 std::log(static_cast<double>(a.n_max)));
    for (u64 i = 0; i < a.random; ++i) {
      const auto n = static_cast<u64>(std::exp(log_n(rng)));
      runs.emplace_back(n, default_delta(n));
    }
  }
  if (runs.empty()) throw UsageError("nothing to run: give --n or --random");

  if (a.format == "csv") out << kBenchCsvHeader << '\n';
  for (const auto& [n, d] : runs) {
    if (d > n) throw UsageError("delta exceeds n for n = " + std::to_string(n));
    for (Engine e : engines) {
      if (e == Engine::cubic) SieveConfig{n, d, k_num, k_den}.validate();
      const RunReport r = bench_one(e, n, d, k_num, k_den);
      if (a.format == "csv") {
        out << r.csv_row() << '\n';
      } else {
        print_report(out, r);
        if (e == Engine::cubic) {
          out << "  ratio candidates/(delta ln n) = " << std::setprecision(6) << r.work_ratio();
          out << "  dioph calls = " << r.stats.dioph_calls;
#ifdef CUBICSIEVE_PROFILE
          out << "  dioph time fraction = "
              << (r.wall_s > 0 ? static_cast<double>(r.stats.dioph_ns) * 1e-9 / r.wall_s : 0.0);
#else
          out << "  dioph time fraction = n/a (build with CUBICSIEVE_PROFILE)";
#endif
          out << '\n';
        }
      }
    }
  }
  return kExitOk;
}

}  // namespace

double RunReport::work_ratio() const {
  if (delta == 0 || n < 2) return 0;
  return static_cast<double>(stats.candidates) / (static_cast<double>(delta) * std::log(static_cast<double>(n)));
}

std::string RunReport::csv_row() const {
  std::ostringstream os;
  os << engine << ',' << n << ',' << delta << ',' << k << ',' << std::fixed << std::setprecision(6)
     << wall_s << ',' << stats.blocks << ',' << stats.candidates << ',' << stats.hits << ','
     << stats.false_alarms << ',' << stats.peak_bits;
  return os.str();
}

bool parse_k(const std::string& text, u64& num, u64& den) {
  if (text.empty()) return false;
  const auto digits = [](std::string_view s) {
    return !s.empty() && s.size() <= 18 &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  u64 a = 0, b = 1;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string_view lhs(text.data(), slash), rhs(text.data() + slash + 1, text.size() - slash - 1);
    if (!digits(lhs) || !digits(rhs)) return false;
    a = std::stoull(std::string(lhs));
    b = std::stoull(std::string(rhs));
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string_view lhs(text.data(), dot), rhs(text.data() + dot + 1, text.size() - dot - 1);
    if (!digits(lhs) || !digits(rhs) || lhs.size() + rhs.size() > 18) return false;
    b = 1;
    for (std::size_t i = 0; i < rhs.size(); ++i) b *= 10;
    a = std::stoull(std::string(lhs)) * b + std::stoull(std::string(rhs));
  } else {
    if (!digits(text)) return false;
    a = std::stoull(text);
  }
  if (b == 0) return false;
  const u64 g = std::gcd(a, b);
  num = g ? a / g : 0;
  den = g ? b / g : 1;
  return true;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Space-efficient segmented sieves: primes, factorizations, Moebius and Mertens"};
  app.name(args.empty() ? "cubicsieve" : args[0]);
  app.require_subcommand(1);

  PrimesArgs primes;
  auto* c_primes = app.add_subcommand("primes", "list or count the primes of an interval or range");
  add_range_options(c_primes, primes.range);
  c_primes->add_option("--format", primes.format, "lines | count | bits")
      ->check(CLI::IsMember({"lines", "count", "bits"}))
      ->capture_default_str();
  c_primes->add_flag("--stats", primes.stats, "print a run report to stderr");

  RangeArgs factor;
  auto* c_factor = app.add_subcommand("factor", "factor every integer of an interval or range");
  add_range_options(c_factor, factor);

  RangeArgs mobius;
  auto* c_mobius = app.add_subcommand("mobius", "Moebius function values, one per line");
  add_range_options(c_mobius, mobius);

  MertensArgs mert;
  auto* c_mertens = app.add_subcommand("mertens", "Mertens function M(N) and sqrt(x) check");
  add_range_options(c_mertens, mert.range);
  c_mertens->add_flag("--report", mert.report, "print the running report with violations");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "time classic and cubic sieves over a sweep");
  c_bench->add_option("--n", bench.n, "interval centers")->delimiter(',');
  c_bench->add_option("--delta", bench.delta, "half-widths (default ceil(n^1/3 (ln n)^2/3))")
      ->delimiter(',');
  c_bench->add_option("--k", bench.k, "K >= 5/2")->capture_default_str();
  c_bench->add_option("--engine", bench.engines, "engines to run")->delimiter(',');
  c_bench->add_option("--format", bench.format, "csv | text")
      ->check(CLI::IsMember({"csv", "text"}))
      ->capture_default_str();
  c_bench->add_option("--random", bench.random, "add this many random centers");
  c_bench->add_option("--seed", bench.seed, "seed for --random")->capture_default_str();
  c_bench->add_option("--n-min", bench.n_min, "smallest random center")->capture_default_str();
  c_bench->add_option("--n-max", bench.n_max, "largest random center")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("cubicsieve");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_primes) return cmd_primes(primes, out, err);
    if (*c_factor) return cmd_factor(factor, out);
    if (*c_mobius) return cmd_mobius(mobius, out);
    if (*c_mertens) return cmd_mertens(mert, out);
    if (*c_bench) return cmd_bench(bench, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: cubic sieve precondition: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitUsage;
}

}  // namespace cubicsieve::cli
