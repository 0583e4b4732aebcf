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


#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "cubicsieve/classic_sieve.hpp"
#include "cubicsieve/cubic_sieve.hpp"
#include "cubicsieve/diophantine.hpp"
#include "cubicsieve/driver.hpp"
#include "cubicsieve/exactmath.hpp"

namespace py = pybind11;
using namespace cubicsieve;

namespace {

// 128-bit values cross the boundary as Python ints via their decimal text.
py::int_ to_py(wide_int v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

wide_int from_py(const py::int_& v) {
  const std::string text = py::str(v);
  const bool neg = !text.empty() && text[0] == '-';
  wide_uint mag = 0;
  for (std::size_t i = neg ? 1 : 0; i < text.size(); ++i) {
    const wide_uint next = mag * 10 + static_cast<unsigned>(text[i] - '0');
    if (next / 10 != mag) throw std::overflow_error("integer does not fit in 127 bits");
    mag = next;
  }
  if (mag >> 127) throw std::overflow_error("integer does not fit in 127 bits");
  return neg ? -static_cast<wide_int>(mag) : static_cast<wide_int>(mag);
}

py::tuple to_py(const Rational& r) { return py::make_tuple(to_py(r.num()), to_py(r.den())); }

SieveConfig config(u64 n, u64 delta, u64 k_num, u64 k_den) { return {n, delta, k_num, k_den}; }

py::list factor_lists(const FactorTable& t) {
  py::list out;
  for (u64 j = 0; j < t.size(); ++j) {
    py::list f;
    for (const auto& pp : t.factors(j)) f.append(py::make_tuple(pp.prime, pp.exponent));
    out.append(f);
  }
  return out;
}

DriverOptions options(const std::string& engine, u64 delta, u64 k_num, u64 k_den, unsigned jobs) {
  const auto e = parse_engine(engine);
  if (!e) throw py::value_error("engine must be classic, cubic or auto");
  DriverOptions o;
  o.engine = *e;
  o.delta = delta;
  o.k_num = k_num;
  o.k_den = k_den;
  o.jobs = jobs;
  return o;
}

}  // namespace

PYBIND11_MODULE(_cubicsieve, m) {
  m.doc() = "Space-efficient segmented sieve of Eratosthenes";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<SieveStats>(m, "SieveStats")
      .def(py::init<>())
      .def_readonly("blocks", &SieveStats::blocks)
      .def_readonly("dioph_calls", &SieveStats::dioph_calls)
      .def_readonly("candidates", &SieveStats::candidates)
      .def_readonly("hits", &SieveStats::hits)
      .def_readonly("false_alarms", &SieveStats::false_alarms)
      .def_readonly("peak_bits", &SieveStats::peak_bits)
      .def("consistent", &SieveStats::consistent)
      .def("__repr__", [](const SieveStats& s) {
        return "SieveStats(blocks=" + std::to_string(s.blocks) +
               ", candidates=" + std::to_string(s.candidates) + ", hits=" + std::to_string(s.hits) +
               ", false_alarms=" + std::to_string(s.false_alarms) +
               ", peak_bits=" + std::to_string(s.peak_bits) + ")";
      });

  m.def("frac_part", [](const py::int_& num, const py::int_& den) {
    return to_py(frac_part(from_py(num), from_py(den)));
  }, py::arg("num"), py::arg("den"), "{num / den} as a reduced (num, den) pair.");

  m.def("dioph_appr", [](const py::int_& num, const py::int_& den, const py::int_& max_den) {
    const DiophResult r = dioph_appr(Rational(from_py(num), from_py(den)), from_py(max_den));
    return py::make_tuple(to_py(r.a), to_py(r.a_inv), to_py(r.q));
  }, py::arg("num"), py::arg("den"), py::arg("max_den"),
     "(a, a_inv, q) with q <= max_den and |num/den - a/q| <= 1/(q max_den).");

  m.def("seg_siev", [](u64 n, u64 delta) { return seg_siev(n, delta).values(); },
        py::arg("n"), py::arg("delta"), "Primes in [n, n + delta].");

  m.def("new_seg_siev", [](u64 n, u64 delta, u64 k_num, u64 k_den, SieveStats* stats) {
    return new_seg_siev(config(n, delta, k_num, k_den), stats).values();
  }, py::arg("n"), py::arg("delta"), py::arg("k_num") = 3, py::arg("k_den") = 1,
     py::arg("stats") = nullptr, "Primes in [n - delta, n + delta].");

  m.def("seg_siev_fac", [](u64 n, u64 delta) { return factor_lists(seg_siev_fac(n, delta)); },
        py::arg("n"), py::arg("delta"), "Factorizations of n, ..., n + delta.");

  m.def("new_seg_siev_fac", [](u64 n, u64 delta, u64 k_num, u64 k_den, SieveStats* stats) {
    return factor_lists(new_seg_siev_fac(config(n, delta, k_num, k_den), stats));
  }, py::arg("n"), py::arg("delta"), py::arg("k_num") = 3, py::arg("k_den") = 1,
     py::arg("stats") = nullptr, "Factorizations of n - delta, ..., n + delta.");

  m.def("mobius_segment", [](u64 n, u64 delta, u64 k_num, u64 k_den, SieveStats* stats) {
    return mobius_segment(config(n, delta, k_num, k_den), stats);
  }, py::arg("n"), py::arg("delta"), py::arg("k_num") = 3, py::arg("k_den") = 1,
     py::arg("stats") = nullptr);

  m.def("primes_up_to", [](u64 limit, const std::string& engine, u64 delta, u64 k_num, u64 k_den,
                           unsigned jobs) {
    std::vector<u64> out;
    {
      py::gil_scoped_release release;
      primes_up_to(limit, [&](std::span<const u64> b) { out.insert(out.end(), b.begin(), b.end()); },
                   options(engine, delta, k_num, k_den, jobs));
    }
    return out;
  }, py::arg("limit"), py::arg("engine") = "auto", py::arg("delta") = 0, py::arg("k_num") = 3,
     py::arg("k_den") = 1, py::arg("jobs") = 1);

  m.def("mertens", [](u64 limit, const std::string& engine, u64 delta, unsigned jobs) {
    MertensResult r;
    {
      py::gil_scoped_release release;
      r = mertens(limit, options(engine, delta, 3, 1, jobs));
    }
    return py::make_tuple(r.sum, r.violations);
  }, py::arg("limit"), py::arg("engine") = "auto", py::arg("delta") = 0, py::arg("jobs") = 1,
     "(M(limit), [x <= limit with |M(x)| > sqrt(x)]).");

  m.def("default_delta", &default_delta, py::arg("x"));

  m.def("block_params", [](u64 start, u64 n, u64 delta, u64 k_num, u64 k_den) {
    const BlockParams bp = block_params(start, config(n, delta, k_num, k_den));
    py::dict d;
    d["start"] = bp.start;
    d["half_width"] = bp.half_width;
    d["center"] = bp.center;
    d["alpha1"] = to_py(bp.alpha1);
    d["alpha0"] = to_py(bp.alpha0);
    d["eta"] = to_py(bp.eta);
    d["dioph"] = py::make_tuple(to_py(bp.dioph.a), to_py(bp.dioph.a_inv), to_py(bp.dioph.q));
    d["c"] = to_py(bp.c);
    d["k"] = to_py(bp.k);
    d["candidates"] = enumerate_candidates(bp);
    return d;
  }, py::arg("start"), py::arg("n"), py::arg("delta"), py::arg("k_num") = 3, py::arg("k_den") = 1);
}
