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

#include "kissing/complex.hpp"

#include <algorithm>
#include <ostream>

namespace kp {

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  *this = *this * rhs;
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  *this = *this / rhs;
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
  // mpfr_fmma gives a single rounding for ad +/- bc.
  Real re = make_real_with_bits(working_bits());
  Real im = make_real_with_bits(working_bits());
  mpfr_fmms(re.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_fmma(im.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

Complex operator/(const Complex& a, const Complex& b) {
  // Scale the divisor by a power of two so |b| ~ 1; exact, and keeps the
  // denominator away from the exponent limits.
  const long e = b.is_zero() ? 0 : std::max(b.re_.exponent(), b.im_.exponent());
  const Real br = ldexp(b.re_, -e);
  const Real bi = ldexp(b.im_, -e);
  Real den = make_real_with_bits(working_bits() + 8);
  mpfr_fmma(den.get(), br.get(), br.get(), bi.get(), bi.get(), MPFR_RNDN);
  Real re = make_real_with_bits(working_bits() + 8);
  Real im = make_real_with_bits(working_bits() + 8);
  mpfr_fmma(re.get(), a.re_.get(), br.get(), a.im_.get(), bi.get(), MPFR_RNDN);
  mpfr_fmms(im.get(), a.im_.get(), br.get(), a.re_.get(), bi.get(), MPFR_RNDN);
  return {ldexp(re / den, -e), ldexp(im / den, -e)};
}

Complex imag_unit() { return {Real(0), Real(1)}; }

Complex conj(const Complex& z) { return {rounded(z.real()), -z.imag()}; }

Complex times_i(const Complex& z) { return {-z.imag(), rounded(z.real())}; }

Real abs(const Complex& z) { return hypot(z.real(), z.imag()); }

Real abs1(const Complex& z) { return abs(z.real()) + abs(z.imag()); }

Real norm(const Complex& z) {
  Real r = make_real_with_bits(working_bits());
  mpfr_fmma(r.get(), z.real().get(), z.real().get(), z.imag().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }

Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

Complex exp(const Complex& z) {
  const Real m = exp(z.real());
  if (z.imag().is_zero()) return {m, Real(0)};
  return polar(m, z.imag());
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return {Real(0), Real(0)};
  // sqrt((|z| + |x|) / 2) on the stable side, the other part by division.
  const Real t = sqrt((abs(z) + abs(z.real())) / 2);
  if (z.real().sign() >= 0) {
    return {t, z.imag() / (2 * t)};
  }
  Real im = z.imag().sign() < 0 ? -t : t;
  return {abs(z.imag()) / (2 * t), std::move(im)};
}

Complex sin(const Complex& z) {
  if (z.imag().is_zero()) return {sin(z.real()), Real(0)};
  return {sin(z.real()) * cosh(z.imag()), cos(z.real()) * sinh(z.imag())};
}

Complex cos(const Complex& z) {
  if (z.imag().is_zero()) return {cos(z.real()), Real(0)};
  return {cos(z.real()) * cosh(z.imag()), -(sin(z.real()) * sinh(z.imag()))};
}

Complex pow(const Complex& z, const Real& p) {
  if (z.is_zero()) return {Real(0), Real(0)};
  return exp(log(z) * p);
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1)) / pow(z, -n);
  Complex result(Real(1));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Complex rounded(const Complex& z) { return {rounded(z.real()), rounded(z.imag())}; }

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << '(' << z.real() << ',' << z.imag() << ')';
}

}  // namespace kp
