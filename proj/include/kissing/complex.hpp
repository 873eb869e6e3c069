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

#include <iosfwd>

#include "kissing/real.hpp"

namespace kp {

/// Complex number over Real. Arithmetic follows Real's working-precision
/// rules; each component of a product or quotient is faithfully rounded.
class Complex {
 public:
  Complex() = default;
  Complex(const Real& re) : re_(re), im_(make_zero_like()) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  /// Explicit so that overloads taking Real and Complex stay unambiguous
  /// for double arguments.
  explicit Complex(double re, double im = 0.0) : re_(re), im_(im) {}

  const Real& real() const noexcept { return re_; }
  const Real& imag() const noexcept { return im_; }
  Real& real() noexcept { return re_; }
  Real& imag() noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);

  Complex operator-() const { return {-re_, -im_}; }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& b) { return {a.re_ * b, a.im_ * b}; }
  friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re_, a * b.im_}; }
  friend Complex operator/(const Complex& a, const Real& b) { return {a.re_ / b, a.im_ / b}; }
  template <std::integral I>
  friend Complex operator*(const Complex& a, I b) {
    return {a.re_ * b, a.im_ * b};
  }
  template <std::integral I>
  friend Complex operator*(I a, const Complex& b) {
    return {b.re_ * a, b.im_ * a};
  }
  template <std::integral I>
  friend Complex operator/(const Complex& a, I b) {
    return {a.re_ / b, a.im_ / b};
  }

  friend bool operator==(const Complex& a, const Complex& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  static Real make_zero_like() { return Real(); }

  Real re_;
  Real im_;
};

/// The imaginary unit at working precision.
Complex imag_unit();

Complex conj(const Complex& z);
/// Multiplication by i without rounding.
Complex times_i(const Complex& z);
Real abs(const Complex& z);
/// |re| + |im|; cheap pivot magnitude.
Real abs1(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch, Im in (-pi, pi].
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
/// exp(p log z), principal branch; pow(0, p) = 0 for p > 0.
Complex pow(const Complex& z, const Real& p);
Complex pow(const Complex& z, long n);
Complex polar(const Real& r, const Real& theta);
Complex rounded(const Complex& z);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace kp
