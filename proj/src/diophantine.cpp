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

#include "cubicsieve/diophantine.hpp"

#include <cassert>
#include <stdexcept>

namespace cubicsieve {

namespace {

// Walks the continued fraction of x/y. The complete quotient x/y is kept
// as an exact pair; taking 1/(alpha - b) is the Euclid step (x, y) -> (y, x mod y).
// Convergent recurrence: (p, q) <- b * (p, q) + (p_prev, q_prev), with sign
// s = (-1)^k tracking p_k q_{k-1} - p_{k-1} q_k.
DiophResult walk(wide_int x, wide_int y, wide_int max_den, int& steps) {
  wide_int b = x / y;
  wide_int p = b, q = 1;
  wide_int p_prev = 1, q_prev = 0;
  wide_int s = 1;
  steps = 0;
  while (q <= max_den) {
    assert(p * q_prev - p_prev * q == -s);
    const wide_int rem = x - b * y;
    if (rem == 0) {
      // alpha == p/q exactly.
      return {p, -s * q_prev, q};
    }
    x = y;
    y = rem;
    b = x / y;
    const wide_int p_next = b * p + p_prev;
    const wide_int q_next = b * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    s = -s;
    ++steps;
  }
  return {p_prev, s * q, q_prev};
}

}  // namespace

DiophResult dioph_appr(const Rational& alpha, wide_int max_den, int* iterations) {
  if (!alpha.in_unit_interval()) throw std::domain_error("dioph_appr: alpha outside [0,1)");
  if (max_den < 1) throw std::domain_error("dioph_appr: Q must be positive");

  int steps = 0;
  DiophResult r = walk(alpha.num(), alpha.den(), max_den, steps);
  if (iterations) *iterations = steps;

  r.a_inv = mod_floor(r.a_inv, r.q);
  if (r.q > 1 && mod_floor(r.a * r.a_inv, r.q) != 1) {
    throw std::logic_error("dioph_appr: modular inverse self-check failed");
  }
  return r;
}

}  // namespace cubicsieve
