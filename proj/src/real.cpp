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

#include "kissing/real.hpp"

#include <climits>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace kp {

namespace {

constexpr long kDefaultBits = 256;

thread_local long tls_working_bits = kDefaultBits;

}  // namespace

long working_bits() noexcept { return tls_working_bits; }

WorkingPrecision::WorkingPrecision(long bits) : previous_(tls_working_bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw std::invalid_argument("working precision out of range: " + std::to_string(bits));
  }
  tls_working_bits = bits;
}

WorkingPrecision::~WorkingPrecision() { tls_working_bits = previous_; }

Real::Real(Uninitialized, long bits) { mpfr_init2(value_, bits); }

Real make_real_with_bits(long bits) { return Real(Real::Uninitialized{}, bits); }

Real::Real() : Real(Uninitialized{}, tls_working_bits) { mpfr_set_zero(value_, 1); }

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) : Real(Uninitialized{}, tls_working_bits) { mpfr_set_si(value_, v, MPFR_RNDN); }

Real::Real(long long v) : Real(Uninitialized{}, tls_working_bits) {
  static_assert(sizeof(long long) == sizeof(long), "LP64 assumed");
  mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
}

Real::Real(unsigned long v) : Real(Uninitialized{}, tls_working_bits) {
  mpfr_set_ui(value_, v, MPFR_RNDN);
}

Real::Real(double v) : Real(Uninitialized{}, tls_working_bits) { mpfr_set_d(value_, v, MPFR_RNDN); }

Real::Real(std::string_view decimal) : Real(Uninitialized{}, tls_working_bits) {
  std::string s(decimal);
  char* end = nullptr;
  if (mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN), end == s.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
}

Real::Real(const Real& other) : Real(Uninitialized{}, other.precision()) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limb buffer; the moved-from object only supports destruction
  // and assignment afterwards.
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_->_mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this == &other) return *this;
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
  return *this;
}

Real::~Real() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

double Real::to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  const int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  if (n < 0) throw std::runtime_error("mpfr_snprintf failed");
  if (static_cast<size_t>(n) >= buf.size()) {
    buf.resize(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  }
  return std::string(buf.data());
}

long Real::exponent() const noexcept {
  if (!mpfr_regular_p(value_)) return LONG_MIN / 2;
  return mpfr_get_exp(value_);
}

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(Uninitialized{}, tls_working_bits);
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(Real::Uninitialized{}, tls_working_bits);
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(Real::Uninitialized{}, tls_working_bits);
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(Real::Uninitialized{}, tls_working_bits);
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(Real::Uninitialized{}, tls_working_bits);
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real Real::scaled_mul(const Real& a, long b) {
  Real r(Real::Uninitialized{}, tls_working_bits);
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real Real::scaled_div(const Real& a, long b) {
  Real r(Real::Uninitialized{}, tls_working_bits);
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real r = make_real_with_bits(working_bits());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log2(const Real& x) { return unary(x, mpfr_log2); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real floor(const Real& x) {
  Real r = make_real_with_bits(working_bits());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r = make_real_with_bits(working_bits());
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r = make_real_with_bits(working_bits());
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = make_real_with_bits(working_bits());
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = make_real_with_bits(working_bits());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = make_real_with_bits(working_bits());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return rounded(b < a ? b : a); }
Real max(const Real& a, const Real& b) { return rounded(a < b ? b : a); }

Real pi() {
  Real r = make_real_with_bits(working_bits());
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real rounded(const Real& x) {
  Real r = make_real_with_bits(working_bits());
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  const auto p = os.precision();
  return os << x.to_string(p > 0 ? static_cast<int>(p) : 6);
}

int decimal_digits_for_bits(long bits) {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120));
}

}  // namespace kp
