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

// Shared helpers for the unit tests: a tiny deterministic generator for
// property tests and tolerance comparisons on multiprecision values.

#include <cstdint>
#include <string>

#include "kissing/complex.hpp"

namespace kt {

/// SplitMix64; enough for sampling test parameters reproducibly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

inline kp::Complex cx(const char* re, const char* im) {
  return {kp::Real(std::string_view(re)), kp::Real(std::string_view(im))};
}

inline kp::Real rel(const kp::Complex& a, const kp::Complex& b) {
  const kp::Real s = kp::max(kp::abs(a), kp::abs(b));
  return s.is_zero() ? kp::Real(0) : kp::abs(a - b) / s;
}

inline kp::Real rel(const kp::Real& a, const kp::Real& b) {
  const kp::Real s = kp::max(kp::abs(a), kp::abs(b));
  return s.is_zero() ? kp::Real(0) : kp::abs(a - b) / s;
}

}  // namespace kt
