// Copyright 2026 The Kissing Polynomials Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "kissing/complex.hpp"
#include "kissing/numerics.hpp"

namespace kp {

/// mu_0..mu_m of the weight exp(i omega x) on [-1, 1].
struct MomentSequence {
  Complex omega;
  std::vector<Complex> values;
  PrecisionPolicy policy;

  int degree() const noexcept { return static_cast<int>(values.size()) - 1; }
  const Complex& operator[](int n) const { return values.at(static_cast<size_t>(n)); }
};

/// Moments from the power series in omega, evaluated with enough guard
/// bits to absorb the exp(|omega|) cancellation. When |omega| > m the
/// integration-by-parts recurrence is run as well and must agree
/// (CrossCheckFailed otherwise). Values are rounded to policy.bits.
MomentSequence moments(int m, const Complex& omega, const PrecisionPolicy& policy);
MomentSequence moments(int m, const Real& omega, const PrecisionPolicy& policy);

/// d^k/domega^k mu_n = i^k mu_{n+k}. Throws IndexOutOfRange when n + k
/// exceeds the sequence.
Complex moment_derivative(const MomentSequence& seq, int n, int k);

/// Guard bits needed by the series at |omega|.
long moment_guard_bits(const Complex& omega);

}  // namespace kp
