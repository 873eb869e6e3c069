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

#include "doctest.h"

#include "closed_forms.hpp"
#include "kissing/hankel.hpp"
#include "support.hpp"

using kp::Complex;
using kp::Real;

namespace {

kp::PrecisionPolicy policy_bits(long bits) {
  kp::PrecisionPolicy p;
  p.bits = bits;
  return p;
}

}  // namespace

TEST_CASE("hankel_det examples") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  CHECK(kt::rel(kp::hankel_det(0, kp::pi() / 2, p).value, 4 / kp::pi()) < Real(1e-60));
  CHECK(kt::rel(kp::hankel_det(1, Real(0), p).value, Real(4) / 3) < Real(1e-60));
  CHECK(kt::rel(kp::hankel_det(3, Real(0), p).value, Real(256) / 23625) < Real(1e-60));
  // 4 + 2 (cos 2 - 1)
  const Real h11("1.1677063269057152260048635409984756204679984578489");
  CHECK(kt::rel(kp::hankel_det(1, Real(1), p).value, h11) < Real(1e-45));
  CHECK(kp::hankel_det(-1, Real(3), p).value == Real(1));
}

TEST_CASE("hankel view keeps Hankel structure") {
  kp::WorkingPrecision wp(256);
  auto view = kp::hankel_view(4, Complex(Real(7)), policy_bits(256));
  for (int j = 0; j <= 4; ++j)
    for (int k = 0; k <= 4; ++k)
      if (j + k <= 4) CHECK(view.entries(j, k) == view.entries(0, j + k));
}

TEST_CASE("property: closed forms for h_0..h_3") {
  kp::WorkingPrecision wp(256);
  kt::Rng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const Real w(rng.uniform(0.5, 50.0));
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(n);
      CAPTURE(w.to_double());
      const Real h = kp::hankel_det(n, w, policy_bits(256)).value;
      const Real exact = kt::closed_h(n, w);
      // Near zeros of h_0, h_2 the comparison is absolute on the envelope.
      const Real scale = kp::max(kp::abs(exact), kp::envelope(n, Complex(w)));
      CHECK(kp::abs(h - exact) / scale < Real(1e-25));
    }
  }
}

TEST_CASE("property: reality of h_n for real omega") {
  kp::WorkingPrecision wp(256);
  kt::Rng rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const Real w(rng.uniform(0.1, 50.0));
    const int n = rng.integer(0, 8);
    const auto r = kp::hankel_det(n, w, policy_bits(256));
    const Real scale = kp::max(kp::abs(r.raw), kp::envelope(n, Complex(w)));
    CHECK(kp::abs(r.raw.imag()) <= Real(1e-30) * scale);
  }
}

TEST_CASE("derivatives") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  const Real w = kp::pi() / 2;
  const Real expected = -8 / (kp::pi() * kp::pi());
  CHECK(kt::rel(kp::hankel_det_derivative(0, w, 1, p), expected) < Real(1e-60));
  CHECK(kp::abs(kp::hankel_det_derivative(1, Real("1e-30"), 1, p)) < Real(1e-28));

  kp::WorkingPrecision wide(512);
  const auto p512 = policy_bits(512);
  const Real delta("1e-10");
  const Real fd = (kp::hankel_det(2, Real(3) + delta, p512).value -
                   kp::hankel_det(2, Real(3) - delta, p512).value) /
                  (2 * delta);
  CHECK(kt::rel(kp::hankel_det_derivative(2, Real(3), 1, p512), fd) < Real(1e-12));
  const Real fd2 = (kp::hankel_det_derivative(2, Real(3) + delta, 1, p512) -
                    kp::hankel_det_derivative(2, Real(3) - delta, 1, p512)) /
                   (2 * delta);
  CHECK(kt::rel(kp::hankel_det_derivative(2, Real(3), 2, p512), fd2) < Real(1e-12));
}

TEST_CASE("toda residual") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  CHECK(kp::toda_residual(1, Real(1), p) < Real(1e-25));
  CHECK(kp::toda_residual(3, Real(10), p) < Real(1e-20));
  kt::Rng rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = rng.integer(1, 6);
    const Real w(rng.uniform(0.5, 50.0));
    CHECK(kp::toda_residual(n, w, p) < Real(1e-20));
  }
}

TEST_CASE("product formula") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  CHECK(kt::rel(kp::product_formula_det(1, Real(0), p), Real(2)) < Real(1e-60));
  CHECK(kt::rel(kp::product_formula_det(2, Real(0), p), Real(4) / 3) < Real(1e-60));
  CHECK(kt::rel(kp::product_formula_det(3, Real(5), p), kp::hankel_det(2, Real(5), p).value) <
        Real(1e-25));
  // h_0 vanishes at pi, so p_1 does not exist there.
  CHECK_THROWS_AS(kp::product_formula_det(3, kp::pi(), p), kp::SingularChain);
}

TEST_CASE("legendre limits") {
  kp::WorkingPrecision wp(256);
  CHECK(kt::rel(kp::legendre_hankel(0), Real(2)) < Real(1e-70));
  CHECK(kt::rel(kp::legendre_hankel(2), Real(32) / 135) < Real(1e-70));
  for (int n = 0; n <= 6; ++n) {
    CHECK(kt::rel(kp::hankel_det(n, Real(0), policy_bits(256)).value, kp::legendre_hankel(n)) <
          Real(1e-50));
  }
}
