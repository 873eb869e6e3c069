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

#include <functional>
#include <string>
#include <vector>

#include "kissing/complex.hpp"
#include "kissing/errors.hpp"

namespace kp {

/// Precision contract shared by every computation.
struct PrecisionPolicy {
  long bits = 256;        ///< working mantissa bits, >= 64
  double rel_tol = 1e-30; ///< acceptance tolerance of self-checks
  long max_bits = 4096;   ///< escalation cap

  /// Throws InvalidArgument unless bits >= 64, max_bits >= bits and
  /// 0 < rel_tol < 1.
  void validate() const;

  /// Same tolerance, precision doubled (capped at max_bits).
  PrecisionPolicy escalated() const;
  PrecisionPolicy with_bits(long b) const;
};

/// |a - b| / max(|a|, |b|), or 0 when both vanish.
Real relative_difference(const Complex& a, const Complex& b);
Real relative_difference(const Real& a, const Real& b);

/// The tolerance a check can honour at `bits`: rel_tol, but never tighter
/// than 2^(32 - bits).
Real effective_tolerance(const PrecisionPolicy& policy, long bits);

using PrecisionParameterized = std::function<Complex(long bits)>;

struct AdaptiveResult {
  Complex value;
  long bits;  ///< precision of the accepted evaluation
};

/// Evaluates `computation` at policy.bits and 2*policy.bits and accepts the
/// higher precision value when the two agree to rel_tol; otherwise keeps
/// doubling until max_bits. Throws PrecisionExhausted.
///
/// Agreement is judged relative to max(|a|, |b|, floor); a positive floor
/// turns the test into an absolute one for values that may vanish.
AdaptiveResult adaptive_eval(const PrecisionParameterized& computation,
                             const PrecisionPolicy& policy, const Real& floor = Real(0));

using VectorParameterized = std::function<std::vector<Complex>(long bits)>;

struct AdaptiveVector {
  std::vector<Complex> values;
  long bits;
};

/// adaptive_eval for a vector result; agreement in the max norm relative to
/// max(||a||, ||b||, floor).
AdaptiveVector adaptive_eval_vector(const VectorParameterized& computation,
                                    const PrecisionPolicy& policy, const Real& floor = Real(0));

/// Runs body(i) for i in [0, count) on up to `threads` threads. Each index
/// is handled by exactly one thread; callers write results into per-index
/// slots so output order never depends on scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

/// Thread count from KP_THREADS, or 1.
int default_thread_count();

}  // namespace kp
