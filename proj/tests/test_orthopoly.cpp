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

#include <algorithm>

#include "closed_forms.hpp"
#include "kissing/orthopoly.hpp"
#include "support.hpp"

using kp::Complex;
using kp::Real;

namespace {

kp::PrecisionPolicy policy_bits(long bits) {
  kp::PrecisionPolicy p;
  p.bits = bits;
  return p;
}

// Real zero of h_2 near 9.2, root of the closed form at 50 digits.
Real h2_zero() { return Real("9.2031832639062587441718705886593267283625425402485"); }

}  // namespace

TEST_CASE("monic_op examples") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  auto p2 = kp::monic_op(2, Complex(Real(0)), p);
  REQUIRE(p2.coeffs.size() == 3);
  CHECK(kt::rel(p2.coeffs[0], Complex(Real(-1) / 3)) < Real(1e-60));
  CHECK(abs(p2.coeffs[1]) < Real(1e-60));
  CHECK(p2.coeffs[2] == Complex(Real(1)));

  auto p1 = kp::monic_op(1, Complex(kp::pi() / 2), p);
  CHECK(kt::rel(p1.coeffs[0], Complex(Real(0), -2 / kp::pi())) < Real(1e-60));

  CHECK_THROWS_AS(kp::monic_op(3, Complex(h2_zero()), p), kp::NearSingular);
  try {
    kp::monic_op(3, Complex(h2_zero()), p);
  } catch (const kp::NearSingular& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("tilde_op examples") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  auto t1 = kp::tilde_op(1, Complex(Real(0)), p);
  CHECK(abs(t1.coeffs[0]) < Real(1e-60));
  CHECK(kt::rel(t1.coeffs[1], Complex(Real(2))) < Real(1e-60));

  const Complex w(Real(5));
  auto t2 = kp::tilde_op(2, w, p);
  auto m2 = kp::monic_op(2, w, p);
  const Real h1 = kp::hankel_det(1, Real(5), p).value;
  for (int k = 0; k <= 2; ++k) {
    CHECK(abs(t2.coeffs[static_cast<size_t>(k)] - m2.coeffs[static_cast<size_t>(k)] * h1) <=
          Real(1e-25) * kp::coefficient_norm(t2.coeffs));
  }
  const Complex z(Real("0.3"), Real("0.7"));
  CHECK(kt::rel(kp::evaluate(t2, z), kp::evaluate(m2, z) * h1) < Real(1e-25));
}

TEST_CASE("tilde_op degenerates at a zero of h_2") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  const Real w = h2_zero();
  auto t3 = kp::tilde_op(3, Complex(w), p);
  auto t2 = kp::tilde_op(2, Complex(w), p);
  CHECK(t3.numerical_degree(Real(1e-20)) == 2);
  const Real d2 = kp::hankel_det_derivative(2, w, 1, p);
  const Real h1 = kp::hankel_det(1, w, p).value;
  const Complex factor(Real(0), d2 / h1);
  Real gap(0);
  for (int k = 0; k <= 3; ++k) {
    const Complex lower = k <= 2 ? t2.coeffs[static_cast<size_t>(k)] * factor : Complex(Real(0));
    gap = kp::max(gap, abs(t3.coeffs[static_cast<size_t>(k)] - lower));
  }
  CHECK(gap <= Real(1e-15) * kp::coefficient_norm(t2.coeffs));
}

TEST_CASE("recurrence coefficients") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  auto rc = kp::recurrence_coeffs(3, Real(0), p);
  for (const auto& a : rc.alphas) CHECK(abs(a) < Real(1e-60));
  CHECK(kt::rel(rc.beta(1), Complex(Real(1) / 3)) < Real(1e-60));
  CHECK(kt::rel(rc.beta(2), Complex(Real(4) / 15)) < Real(1e-60));

  auto half_pi = kp::recurrence_coeffs(1, kp::pi() / 2, p);
  CHECK(kt::rel(half_pi.alphas[0], Complex(Real(0), 2 / kp::pi())) < Real(1e-60));

  auto one = kp::recurrence_coeffs(2, Real(1), p);
  const Real beta1("0.41228292743739191460933500454162490237229511435082");
  CHECK(kt::rel(one.beta(1), Complex(beta1)) < Real(1e-45));

  CHECK_THROWS_AS(kp::recurrence_coeffs(4, h2_zero(), p), kp::NearSingular);
}

TEST_CASE("property: Legendre recurrence coefficients at omega = 0") {
  kp::WorkingPrecision wp(256);
  auto rc = kp::recurrence_coeffs(8, Real(0), policy_bits(256));
  for (int n = 1; n < 8; ++n) {
    const Real expected = Real(n * n) / (4 * n * n - 1);
    CHECK(kt::rel(rc.beta(n), Complex(expected)) < Real(1e-50));
  }
}

TEST_CASE("differential-difference system") {
  kp::WorkingPrecision wp(512);
  const auto p = policy_bits(512);
  const Real step("1e-10");
  CHECK(kp::dd_residual(3, Real(2), p, step) <= Real(1e-10));
  CHECK(kp::dd_residual(2, Real("0.5"), p, step) <= Real(1e-10));
  CHECK(kp::dd_residual(3, Real(0), p, step) <= Real(1e-10));
}

TEST_CASE("evaluate") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  auto p2 = kp::monic_op(2, Complex(Real(0)), p);
  CHECK(kt::rel(kp::evaluate(p2, Complex(Real(1))), Complex(Real(2) / 3)) < Real(1e-60));
  CHECK(abs(kp::evaluate(p2, Complex(1 / sqrt(Real(3))))) < Real(1e-60));
}

TEST_CASE("property: orthogonality, reflection symmetry and Hankel-form recurrence") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  kt::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Real w(rng.uniform(0.2, 30.0));
    const int n = rng.integer(1, 8);
    CAPTURE(w.to_double());
    CAPTURE(n);
    kp::MonicPolynomial poly;
    try {
      poly = kp::monic_op(n, Complex(w), p);
    } catch (const kp::NearSingular&) {
      continue;
    }
    kp::WorkingPrecision high(600);
    const auto mu = kp::moments(2 * n, Complex(w), p.with_bits(600));
    Real worst(0);
    for (int k = 0; k < n; ++k) {
      Complex r(Real(0));
      for (int j = 0; j <= n; ++j) r += poly.coeffs[static_cast<size_t>(j)] * mu[j + k];
      worst = kp::max(worst, abs(r));
    }
    CHECK(worst <= Real(1e-25) * kp::coefficient_norm(poly.coeffs) * kp::max(abs(mu[0]), Real(1e-3)));
    for (int k = 0; k <= n; ++k) {
      const Complex& c = poly.coeffs[static_cast<size_t>(k)];
      // c_k (-1)^{n-k} = conj(c_k): alternately real and imaginary.
      const Real off = (n - k) % 2 == 0 ? abs(c.imag()) : abs(c.real());
      CHECK(off <= Real(1e-30) * kp::max(abs(c), Real(1)));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const Real w(rng.uniform(0.5, 20.0));
    CAPTURE(n);
    CAPTURE(w.to_double());
    CHECK(kp::hankel_recurrence_residual(n, w, p) <= Real(1e-20));
  }
}
