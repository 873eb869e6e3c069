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

#include "kissing/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace kp {

void PrecisionPolicy::validate() const {
  if (bits < 64) throw InvalidArgument("bits must be >= 64, got " + std::to_string(bits));
  if (max_bits < bits) {
    throw InvalidArgument("max_bits (" + std::to_string(max_bits) + ") must be >= bits (" +
                          std::to_string(bits) + ")");
  }
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw InvalidArgument("rel_tol must lie in (0, 1)");
  }
}

PrecisionPolicy PrecisionPolicy::escalated() const {
  PrecisionPolicy p = *this;
  p.bits = std::min(2 * bits, max_bits);
  return p;
}

PrecisionPolicy PrecisionPolicy::with_bits(long b) const {
  PrecisionPolicy p = *this;
  p.bits = b;
  p.max_bits = std::max(max_bits, b);
  return p;
}

Real relative_difference(const Complex& a, const Complex& b) {
  const Real scale = max(abs(a), abs(b));
  if (scale.is_zero()) return Real(0);
  return abs(a - b) / scale;
}

Real relative_difference(const Real& a, const Real& b) {
  const Real scale = max(abs(a), abs(b));
  if (scale.is_zero()) return Real(0);
  return abs(a - b) / scale;
}

Real effective_tolerance(const PrecisionPolicy& policy, long bits) {
  return max(Real(policy.rel_tol), ldexp(Real(1), 32 - bits));
}

AdaptiveResult adaptive_eval(const PrecisionParameterized& computation,
                             const PrecisionPolicy& policy, const Real& floor) {
  policy.validate();
  long bits = policy.bits;
  Complex previous = [&] {
    WorkingPrecision guard(bits);
    return computation(bits);
  }();
  while (2 * bits <= policy.max_bits) {
    bits *= 2;
    WorkingPrecision guard(bits);
    Complex current = computation(bits);
    const Real scale = max(max(abs(previous), abs(current)), abs(floor));
    if (abs(previous - current) <= Real(policy.rel_tol) * scale) {
      return {std::move(current), bits};
    }
    previous = std::move(current);
  }
  throw PrecisionExhausted("no agreement to rel_tol " + std::to_string(policy.rel_tol) +
                           " up to " + std::to_string(policy.max_bits) + " bits");
}

namespace {

Real max_norm(const std::vector<Complex>& v) {
  Real m(0);
  for (const auto& z : v) m = max(m, abs(z));
  return m;
}

}  // namespace

AdaptiveVector adaptive_eval_vector(const VectorParameterized& computation,
                                    const PrecisionPolicy& policy, const Real& floor) {
  policy.validate();
  long bits = policy.bits;
  std::vector<Complex> previous = [&] {
    WorkingPrecision guard(bits);
    return computation(bits);
  }();
  while (2 * bits <= policy.max_bits) {
    bits *= 2;
    WorkingPrecision guard(bits);
    std::vector<Complex> current = computation(bits);
    if (current.size() != previous.size()) {
      throw InvalidArgument("computation changed its result length between precisions");
    }
    const Real scale = max(max(max_norm(previous), max_norm(current)), abs(floor));
    Real gap(0);
    for (size_t i = 0; i < current.size(); ++i) gap = max(gap, abs(current[i] - previous[i]));
    if (gap <= Real(policy.rel_tol) * scale) return {std::move(current), bits};
    previous = std::move(current);
  }
  throw PrecisionExhausted("no agreement to rel_tol " + std::to_string(policy.rel_tol) +
                           " up to " + std::to_string(policy.max_bits) + " bits");
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (count <= 0) return;
  threads = std::clamp(threads, 1, count);
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  // Workers inherit the caller's working precision. Failures are kept per
  // index and the lowest one is rethrown, independent of scheduling.
  const long bits = working_bits();
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> failures(static_cast<size_t>(count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      WorkingPrecision guard(bits);
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          failures[static_cast<size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

int default_thread_count() {
  if (const char* env = std::getenv("KP_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

}  // namespace kp
