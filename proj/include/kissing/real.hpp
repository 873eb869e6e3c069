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

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kp {

/// Mantissa bits used for every Real created on the calling thread.
long working_bits() noexcept;

/// RAII override of the calling thread's working precision.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(long bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  long previous_;
};

/// Arbitrary precision real backed by an MPFR value.
///
/// New values and the results of arithmetic are rounded to the thread's
/// working precision (round-to-nearest). Copies keep the precision of their
/// source; compound assignment keeps the precision of the target.
class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(long long v);
  Real(unsigned long v);
  Real(double v);
  explicit Real(std::string_view decimal);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }
  long precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double() const noexcept;
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const noexcept;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  template <std::integral I>
  Real& operator*=(I rhs) {
    mpfr_mul_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator/=(I rhs) {
    mpfr_div_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  // Integer scaling avoids materialising the integer as a Real.
  template <std::integral I>
  friend Real operator*(const Real& a, I b) {
    return scaled_mul(a, static_cast<long>(b));
  }
  template <std::integral I>
  friend Real operator*(I a, const Real& b) {
    return scaled_mul(b, static_cast<long>(a));
  }
  template <std::integral I>
  friend Real operator/(const Real& a, I b) {
    return scaled_div(a, static_cast<long>(b));
  }

  friend bool operator==(const Real& a, const Real& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;

 private:
  struct Uninitialized {};
  explicit Real(Uninitialized, long bits);

  mpfr_t value_;

  friend Real make_real_with_bits(long bits);
  static Real scaled_mul(const Real& a, long b);
  static Real scaled_div(const Real& a, long b);
};

Real make_real_with_bits(long bits);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real pi();
/// x rounded to the current working precision.
Real rounded(const Real& x);

std::ostream& operator<<(std::ostream& os, const Real& x);

/// Decimal digits that represent `bits` mantissa bits without loss.
int decimal_digits_for_bits(long bits);

}  // namespace kp
