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

// Terminating expansions of h_0..h_3 in omega, used as oracles.

#include "kissing/complex.hpp"

namespace kt {

inline kp::Real closed_h(int n, const kp::Real& w) {
  using kp::Real;
  const Real s = sin(w);
  const Real c = cos(w);
  const Real c2 = cos(2 * w);
  const Real s2 = sin(2 * w);
  switch (n) {
    case 0:
      return 2 * s / w;
    case 1:
      return 4 / pow(w, 2L) + 2 * (c2 - 1) / pow(w, 4L);
    case 2:
      return -32 * s / pow(w, 5L) - 64 * c / pow(w, 6L) + 96 * s / pow(w, 7L) -
             32 * pow(s, 3L) / pow(w, 9L);
    case 3:
      return 256 / pow(w, 8L) + 512 * (c2 - 4) / pow(w, 10L) - 3072 * s2 / pow(w, 11L) -
             768 * (11 * c2 - 2) / pow(w, 12L) + 9216 * s2 / pow(w, 13L) +
             6912 * (c2 - 1) / pow(w, 14L) + 576 * pow(c2 - 1, 2L) / pow(w, 16L);
    default:
      return Real(0);
  }
}

}  // namespace kt
