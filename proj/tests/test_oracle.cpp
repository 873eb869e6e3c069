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

#include "kissing/hankel.hpp"
#include "kissing/oracle.hpp"
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

}  // namespace

TEST_CASE("gauss_legendre") {
  kp::WorkingPrecision wp(256);
  auto one = kp::gauss_legendre(1);
  REQUIRE(one.nodes.size() == 1);
  CHECK(one.nodes[0].is_zero());
  CHECK(abs(one.weights[0] - 2) < Real(1e-70));

  auto two = kp::gauss_legendre(2);
  CHECK(abs(two.nodes[0] + 1 / sqrt(Real(3))) < Real(1e-70));
  CHECK(abs(two.nodes[1] - 1 / sqrt(Real(3))) < Real(1e-70));
  CHECK(abs(two.weights[0] - 1) < Real(1e-70));
  CHECK(abs(two.weights[1] - 1) < Real(1e-70));

  auto three = kp::gauss_legendre(3);
  Real quartic(0);
  for (size_t i = 0; i < 3; ++i) quartic += three.weights[i] * pow(three.nodes[i], 4L);
  CHECK(abs(quartic - Real(2) / 5) < Real(1e-70));

  CHECK_THROWS_AS(kp::gauss_legendre(0), kp::InvalidArgument);
}

TEST_CASE("property: Gauss-Legendre exactness") {
  kp::WorkingPrecision wp(192);
  kt::Rng rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int order = rng.integer(1, 40);
    const auto rule = kp::gauss_legendre(order);
    Real total(0);
    for (const auto& w : rule.weights) {
      CHECK(w > 0);
      total += w;
    }
    CHECK(abs(total - 2) < Real(1e-50));
    for (size_t i = 1; i < rule.nodes.size(); ++i) CHECK(rule.nodes[i - 1] < rule.nodes[i]);
    for (int k = 0; k <= 2 * order - 1; ++k) {
      Real q(0);
      for (size_t i = 0; i < rule.nodes.size(); ++i) q += rule.weights[i] * pow(rule.nodes[i], static_cast<long>(k));
      const Real exact = k % 2 == 1 ? Real(0) : Real(2) / (k + 1);
      CHECK(abs(q - exact) < Real(1e-45));
    }
  }
}

TEST_CASE("heine_hankel examples") {
  kp::WorkingPrecision wp(128);
  const auto p = policy_bits(128);
  const Real w("0.7");
  CHECK(kt::rel(kp::heine_hankel(1, Complex(w), 0, p), Complex(2 * sin(w) / w)) < Real(1e-25));
  const Real h11("1.1677063269057152260048635409984756204679984578489");
  CHECK(kt::rel(kp::heine_hankel(2, Complex(Real(1)), 50, p), Complex(h11)) < Real(1e-10));
  const Complex h25 = kp::heine_hankel(3, Complex(Real(5)), 60, p);
  CHECK(kt::rel(h25, Complex(kp::hankel_det(2, Real(5), p).value)) < Real(1e-10));
  CHECK_THROWS_AS(kp::heine_hankel(4, Complex(Real(1)), 100, p, 1, 1'000'000), kp::CostCapExceeded);
  CHECK_THROWS_AS(kp::heine_hankel(0, Complex(Real(1)), 10, p), kp::IndexOutOfRange);
}

TEST_CASE("heine_poly examples") {
  kp::WorkingPrecision wp(128);
  const auto p = policy_bits(128);
  CHECK(abs(kp::heine_poly(1, Complex(Real(0)), Complex(Real(1)), 0, p) - Complex(Real(1))) < Real(1e-25));
  CHECK(abs(kp::heine_poly(2, Complex(Real(0)), Complex(1 / sqrt(Real(3))), 0, p)) < Real(1e-25));
  const Complex x = kt::cx("0.5", "0.1");
  const Complex oracle = kp::heine_poly(2, Complex(Real(3)), x, 0, p);
  const Complex direct = kp::evaluate(kp::monic_op(2, Complex(Real(3)), p), x);
  CHECK(kt::rel(oracle, direct) < Real(1e-10));
  // h_0 vanishes at omega = pi.
  CHECK_THROWS_AS(kp::heine_poly(1, Complex(kp::pi()), x, 0, p), kp::NearSingular);
}

TEST_CASE("property: oracle equivalence with the determinant path") {
  kp::WorkingPrecision wp(128);
  const auto p = policy_bits(128);
  for (int n = 1; n <= 3; ++n) {
    for (const char* w : {"0.5", "1", "2", "5"}) {
      CAPTURE(n);
      CAPTURE(w);
      const Real omega{std::string_view(w)};
      const Complex oracle = kp::heine_hankel(n, Complex(omega), 0, p, 2);
      const Real det = kp::hankel_det(n - 1, omega, p).value;
      CHECK(abs(oracle - Complex(det)) / abs(det) <= Real(1e-10));
      CHECK(abs(oracle.imag()) <= Real(1e-20) * abs(det));
    }
  }
}

TEST_CASE("property: quadrature convergence until the plateau") {
  kp::WorkingPrecision wp(128);
  const auto p = policy_bits(128);
  const Real omega(8);
  const Real det = kp::hankel_det(1, omega, p).value;
  Real previous(1);
  for (int order : {4, 8, 16, 32}) {
    const Real err = abs(kp::heine_hankel(2, Complex(omega), order, p) - Complex(det)) / abs(det);
    if (previous > Real(1e-25)) CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < Real(1e-25));
}

TEST_CASE("heine sums are independent of the thread count") {
  kp::WorkingPrecision wp(128);
  const auto p = policy_bits(128);
  const Complex a = kp::heine_hankel(3, Complex(Real(2)), 20, p, 1);
  const Complex b = kp::heine_hankel(3, Complex(Real(2)), 20, p, 3);
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}
