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

#include "kissing/asymptotics.hpp"
#include "kissing/hankel.hpp"
#include "kissing/orthopoly.hpp"
#include "kissing/roots.hpp"
#include "support.hpp"

using kp::BigInt;
using kp::Complex;
using kp::PeelFamily;
using kp::Real;

namespace {

kp::PrecisionPolicy policy_bits(long bits) {
  kp::PrecisionPolicy p;
  p.bits = bits;
  return p;
}

struct LambertCase {
  const char* z_re;
  const char* z_im;
  int branch;
  const char* w_re;
  const char* w_im;
};

// Reference values from an independent arbitrary precision implementation.
const LambertCase kLambert[] = {
    {"0.5", "0", -4, "-3.859238417776770548358739355595213164863", "-23.39848114790647848979099148028595497654"},
    {"0.5", "0", 0, "0.3517337112491958260249093009299510651715", "0"},
    {"0.5", "0", 1, "-2.259158898533606187121050769766525594886", "4.220960969266196697459572534681198258007"},
    {"0.5", "0", 2, "-3.104977071892024603922933323937588646728", "10.71348331130125065941052643660345999533"},
    {"1", "0", -1, "-1.533913319793574507919741082072733779785", "-4.375185153061898385470906564852584291624"},
    {"1", "0", 0, "0.5671432904097838729999686622103555497538", "0"},
    {"1", "0", 4, "-3.162952738804084009271383766013750062941", "23.42774750375521281892088111229394913454"},
    {"-0.9", "0.1", -1, "-0.4576612451213931343600174514264627129477", "-1.355935931373131310755281007380959338289"},
    {"-0.9", "0.1", 0, "-0.317070211854493534943901942895942147312", "1.20228745974151225423180239118154955558"},
    {"-0.9", "0.1", 1, "-2.149006728230114399264941989997025008728", "7.462952877194297765998668383912894447552"},
    {"-0.3", "0", -1, "-1.781337023421627611974170281512745260822", "0"},
    {"-0.3", "0", 0, "-0.4894022271802149690362312519962933689234", "0"},
    {"-0.3", "0", 2, "-3.870861976646413675245238487626784326198", "13.86491510712315247386439806542009334053"},
    {"0", "2", -1, "-0.4162724381609168084887657916304056463287", "-3.003891941901226628329450742363913991855"},
    {"0", "2", 0, "0.6834080163265760256204705449240307284612", "0.7433860047413520569080423953067779444858"},
    {"0", "2", 1, "-1.132021448485424434972123283404815269123", "6.099686186188022200020717545444060231004"},
    {"-2", "-1", -1, "-1.186487464991325268442023903710359975397", "-7.227625184072871805827876091707052610907"},
    {"-2", "-1", 0, "0.4238068940225713597695023545443718372327", "-1.400916834978426967022213093033094555168"},
    {"-2", "-1", 1, "0.07596419962354924017182039526909334112262", "2.0711055927038041540503674464676484032"},
    {"30", "40", -4, "0.7903950769980979410334936237747735929799", "-22.66950157642867505330253217969769916971"},
    {"30", "40", 0, "2.839705607963079472069159085348332288775", "0.6891982807633787728595619838536667263335"},
    {"30", "40", 2, "1.416910209950925776368319337613635194834", "12.04001412872188055517935068640632428392"},
    {"0.1", "-0.2", -1, "-3.325498639080248822117183222152251897922", "-5.255361866297600183402999615793555708809"},
    {"0.1", "-0.2", 0, "0.1164564597948441076664271444520053982025", "-0.1613970905913579678270128571283327991126"},
    {"0.1", "-0.2", 1, "-2.891136374928476189779814713345960464653", "2.804660943034297397345515184980854977975"},
    {"-0.5", "0", 0, "-0.7940236323446893679630153219005898091005", "0.7701117505103791096813130774050289294028"},
    {"-0.5", "0", 1, "-2.772069015153081968237035141634000668332", "7.499943028341875788987032938642106029969"},
    {"-0.5", "0", 4, "-3.983478438928438158200568856990101716124", "26.55463719030182970215989553223522118098"},
};

}  // namespace

TEST_CASE("superfactorial and binomials") {
  CHECK(kp::superfactorial(3) == 12);
  CHECK(kp::superfactorial(0) == 1);
  CHECK(kp::superfactorial(-1) == 1);
  CHECK(kp::superfactorial(5) == BigInt(34560));
  CHECK_THROWS_AS(kp::superfactorial(-2), kp::IndexOutOfRange);
  CHECK(kp::binomial(10, 3) == 120);
  CHECK(kp::binomial(3, 5) == 0);
  CHECK(kp::factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("laguerre examples") {
  kp::WorkingPrecision wp(256);
  CHECK(abs(kp::laguerre(1, Complex(Real(1)))) < Real(1e-70));
  CHECK(abs(kp::laguerre(2, Complex(2 - sqrt(Real(2))))) < Real(1e-70));
  CHECK(kp::laguerre(0, Complex(Real(7))).real() == Real(1));
  CHECK(abs(kp::laguerre_recurrence(2, Complex(2 + sqrt(Real(2))))) < Real(1e-70));
}

TEST_CASE("property: Laguerre sum matches the three-term recurrence") {
  kp::WorkingPrecision wp(256);
  kt::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int N = rng.integer(0, 20);
    const Complex c(Real(rng.uniform(-5, 30)), Real(rng.uniform(-10, 10)));
    const Complex a = kp::laguerre(N, c);
    const Complex b = kp::laguerre_recurrence(N, c);
    // Cancellation in the sum costs up to |c|^N / N! relative to the value.
    CHECK(abs(a - b) <= Real(1e-40) * max(abs(a), pow(abs(c) + 1, static_cast<long>(N))));
  }
}

TEST_CASE("leading orders") {
  kp::WorkingPrecision wp(256);
  const Real w(3);
  CHECK(kt::rel(kp::leading_even(1, w), Real(4) / 9) < Real(1e-70));
  CHECK(kt::rel(kp::leading_even(2, w), Real(256) / pow(w, 8L)) < Real(1e-70));
  CHECK(kt::rel(kp::leading_even(3, w), Real(4194304) / pow(w, 18L)) < Real(1e-70));
  CHECK(kt::rel(kp::leading_odd(0, w), 2 * sin(w) / w) < Real(1e-70));
  CHECK(kt::rel(kp::leading_odd(1, w), -32 * sin(w) / pow(w, 5L)) < Real(1e-70));
  CHECK(kt::rel(kp::leading_odd(2, w), 32768 * sin(w) / pow(w, 13L)) < Real(1e-70));
}

TEST_CASE("property: leading orders describe h_n for large omega") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  for (int N = 1; N <= 2; ++N) {
    Real previous(1e9);
    for (int m : {20, 40, 80}) {
      const Real w = (m + Real("0.5")) * kp::pi();
      const Real even = kp::hankel_det(2 * N - 1, w, p).value / kp::leading_even(N, w) - 1;
      const Real odd = kp::hankel_det(2 * N, w, p).value / kp::leading_odd(N, w) - 1;
      CHECK(abs(even) * w < Real(40));
      CHECK(abs(odd) * w < Real(40));
      CHECK(abs(odd) < previous);
      previous = abs(odd);
    }
  }
}

TEST_CASE("endpoint limit") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  CHECK(abs(kp::endpoint_monic_limit(1, Complex(Real(1)), Real(37))) < Real(1e-70));
  CHECK(abs(kp::endpoint_monic_limit(1, Complex(Real(0)), Real(100)) - Complex(Real(0), Real("-0.02"))) <
        Real(1e-70));

  const Real w(200);
  const auto p2 = kp::monic_op(2, Complex(w), p);
  for (const char* c : {"0.5", "2"}) {
    const Complex cc{Real(std::string_view(c))};
    const Complex x = Complex(Real(1)) - cc / Complex(Real(0), w);
    const Complex exact = kp::evaluate(p2, x);
    const Complex limit = kp::endpoint_monic_limit(1, cc, w);
    CHECK(kt::rel(exact, limit) < Real(5) / w);
  }

  // The Laguerre product is a degree 2N polynomial in x with the same zeros.
  for (const auto& z : kp::laguerre_root_prediction(2, Real(50), p)) {
    CHECK(abs(kp::laguerre_product(2, z, Real(50))) < Real(1e-60));
  }
}

TEST_CASE("laguerre root predictions") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  const auto one = kp::laguerre_root_prediction(1, Real(100), p);
  REQUIRE(one.size() == 2);
  CHECK(abs(one[0] - Complex(Real(-1), Real("0.01"))) < Real(1e-60));
  CHECK(abs(one[1] - Complex(Real(1), Real("0.01"))) < Real(1e-60));

  const auto two = kp::laguerre_root_prediction(2, Real(100), p);
  REQUIRE(two.size() == 4);
  const Real lo = (2 - sqrt(Real(2))) / 100;
  const Real hi = (2 + sqrt(Real(2))) / 100;
  CHECK(abs(two[0] - Complex(Real(-1), lo)) < Real(1e-60));
  CHECK(abs(two[1] - Complex(Real(-1), hi)) < Real(1e-60));
  CHECK(abs(two[2] - Complex(Real(1), lo)) < Real(1e-60));
  CHECK(abs(two[3] - Complex(Real(1), hi)) < Real(1e-60));

  // p_4 at omega = 200 against the prediction: error O(omega^-2).
  const auto roots = kp::poly_roots(kp::monic_op(4, Complex(Real(200)), p), p).roots;
  const auto predicted = kp::laguerre_root_prediction(2, Real(200), p);
  const auto matched = kp::match_roots(predicted, roots);
  for (size_t i = 0; i < predicted.size(); ++i) CHECK(abs(predicted[i] - matched[i]) < Real(8) / 40000);
}

TEST_CASE("peel coefficients") {
  using G = kp::GaussianInteger;
  CHECK(kp::peel_coefficient(2, 0) == G{4, 0});
  CHECK(kp::peel_coefficient(2, 1) == G{1, 0});
  CHECK(kp::peel_coefficient(3, 0) == G{0, -16});
  CHECK(kp::peel_coefficient(3, 1) == G{0, 4});
  CHECK(kp::peel_coefficient(4, 0) == G{256, 0});
  CHECK(kp::peel_coefficient(4, 1) == G{256, 0});
  CHECK(kp::peel_coefficient(4, 2) == G{144, 0});
  CHECK(kp::peel_coefficient(1, 0) == G{0, 1});
  CHECK_THROWS_AS(kp::peel_coefficient(4, 3), kp::IndexOutOfRange);
}

TEST_CASE("lambert W") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  CHECK(kp::lambert_w(Complex(Real(0)), 0, p).is_zero());
  CHECK(abs(kp::lambert_w(Complex(exp(Real(1))), 0, p) - Complex(Real(1))) < Real(1e-70));
  CHECK(abs(kp::lambert_w(Complex(-kp::pi() / 2), 0, p) - Complex(Real(0), kp::pi() / 2)) < Real(1e-70));
  CHECK_THROWS_AS(kp::lambert_w(Complex(Real(0)), 1, p), kp::InvalidArgument);
  for (const auto& c : kLambert) {
    CAPTURE(c.z_re);
    CAPTURE(c.z_im);
    CAPTURE(c.branch);
    const Complex z = kt::cx(c.z_re, c.z_im);
    const Complex w = kp::lambert_w(z, c.branch, p);
    CHECK(abs(w - kt::cx(c.w_re, c.w_im)) < Real(1e-38));
    CHECK(abs(w * exp(w) - z) <= Real(1e-30) * abs(z));
  }
}

TEST_CASE("peel ratios: raw coefficients against the closed form") {
  kp::WorkingPrecision wp(256);
  for (auto family : {PeelFamily::Odd, PeelFamily::Even}) {
    for (int N = 1; N <= 4; ++N) {
      for (int k = 0; k < N; ++k) {
        CAPTURE(N);
        CAPTURE(k);
        CHECK(kt::rel(kp::peel_ratio_raw(family, N, k), kp::peel_ratio_simplified(family, N, k)) <
              Real(1e-60));
      }
    }
  }
  CHECK(abs(kp::peel_ratio_simplified(PeelFamily::Odd, 2, 0) - Complex(Real(0), Real(1))) < Real(1e-70));
  CHECK_THROWS_AS(kp::peel_ratio_raw(PeelFamily::Odd, 2, 2), kp::IndexOutOfRange);
}

TEST_CASE("peel predictions seed zeros of h_n") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  for (auto family : {PeelFamily::Odd, PeelFamily::Even}) {
    for (int N = 1; N <= 2; ++N) {
      std::vector<std::pair<Complex, Real>> found;  // refined zero, discrepancy
      for (int ell = 0; ell < kp::peel_phase_count(family, 0); ++ell) {
        for (const auto& pred : kp::peel_prediction(family, N, 0, ell, p)) {
          CHECK(pred.omega_pred.real() > 0);
          CHECK(pred.omega_pred.imag() > 0);
          // Low branches at small |omega| lie outside the asymptotic regime
          // and refine to a zero belonging to another seed, or not at all.
          try {
            const auto z = kp::complex_zero_refine(pred.hankel_index, pred.omega_pred, p);
            const Real d = abs(z.omega - pred.omega_pred);
            if (d < Real(1)) found.emplace_back(z.omega, d);
          } catch (const kp::NoConvergence&) {
          }
        }
      }
      std::sort(found.begin(), found.end(),
                [](const auto& a, const auto& b) { return abs(a.first) < abs(b.first); });
      REQUIRE(found.size() >= 4);
      for (size_t i = 0; i < 4; ++i) {
        CHECK(found[i].second <= Real("0.5"));
        if (i > 0) CHECK(found[i].second <= found[i - 1].second);
      }
    }
  }
}

TEST_CASE("h_1 zeros from the first peel solve omega = sin omega") {
  kp::WorkingPrecision wp(256);
  const auto p = policy_bits(256);
  const auto preds = kp::peel_prediction(PeelFamily::Odd, 1, 0, 1, p);
  REQUIRE_FALSE(preds.empty());
  const auto z = kp::complex_zero_refine(1, preds.front().omega_pred, p);
  const Complex w = z.omega;
  const Real r = kp::min(abs(w - sin(w)), abs(w + sin(w)));
  CHECK(r < Real(1e-40));
  CHECK(w.imag() > 0);
}

TEST_CASE("Pascal determinant identities") {
  CHECK(kp::pascal_det_check(0) == 1);
  CHECK(kp::pascal_det_check(4) == 1);
  CHECK(kp::pascal_det_check(9) == 1);
  CHECK(kp::c_matrix_det_check(5, 2) == 10);
  for (int N = 0; N <= 8; ++N) {
    CHECK(kp::c_matrix_det_check(N, 0) == 1);
    for (int s = 0; s <= N; ++s) CHECK(kp::c_matrix_det_check(N, s) == kp::binomial(N, s));
  }
  CHECK(kp::bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(kp::bareiss_determinant({{1, 2}, {2, 4}}) == 0);
}
