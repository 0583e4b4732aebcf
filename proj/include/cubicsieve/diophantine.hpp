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

#include "cubicsieve/exactmath.hpp"

namespace cubicsieve {

/// Approximant a/q together with the inverse of a modulo q.
struct DiophResult {
  wide_int a = 0;
  wide_int a_inv = 0;  // in [0, q); 0 when q == 1
  wide_int q = 1;

  friend bool operator==(const DiophResult&, const DiophResult&) = default;
};

/// Last continued-fraction convergent a/q of alpha with q <= max_den, so
/// that |alpha - a/q| <= 1/(q * max_den), plus a^-1 mod q read off the
/// neighbouring convergent denominator.
///
/// alpha must lie in [0, 1) (std::domain_error otherwise); max_den >= 1.
/// If `iterations` is non-null it receives the number of Euclid steps taken.
DiophResult dioph_appr(const Rational& alpha, wide_int max_den, int* iterations = nullptr);

}  // namespace cubicsieve
