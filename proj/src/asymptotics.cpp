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

#include "kissing/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "kissing/polynomial.hpp"

namespace kp {

namespace {

Real to_real(const BigInt& v) {
  Real out = make_real_with_bits(working_bits());
  const std::string digits = v.str();
  mpfr_set_str(out.get(), digits.c_str(), 10, MPFR_RNDN);
  return out;
}

BigInt power_of_four(long e) {
  BigInt one = 1;
  return one << static_cast<unsigned>(2 * e);
}

void check_peel_range(int N, int k) {
  if (N < 1 || k < 0 || k > N - 1) {
    throw IndexOutOfRange("peel index needs 0 <= k <= N - 1, got N = " + std::to_string(N) +
                          ", k = " + std::to_string(k));
  }
}

}  // namespace

BigInt factorial(int m) {
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

BigInt superfactorial(int m) {
  if (m < -1) throw IndexOutOfRange("superfactorial needs m >= -1");
  BigInt sf = 1;
  BigInt f = 1;
  for (int i = 1; i <= m; ++i) {
    f *= i;
    sf *= f;
  }
  return sf;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

std::vector<Complex> laguerre_coefficients(int N) {
  if (N < 0) throw IndexOutOfRange("Laguerre degree must be >= 0");
  std::vector<Complex> c;
  for (int s = 0; s <= N; ++s) {
    Real v = to_real(binomial(N, s)) / to_real(factorial(s));
    c.emplace_back(s % 2 == 0 ? v : -v);
  }
  return c;
}

Complex laguerre(int N, const Complex& c) { return horner(laguerre_coefficients(N), c); }

Complex laguerre_recurrence(int N, const Complex& c) {
  if (N < 0) throw IndexOutOfRange("Laguerre degree must be >= 0");
  Complex prev(Real(1));
  if (N == 0) return prev;
  Complex cur = Complex(Real(1)) - c;
  for (int n = 1; n < N; ++n) {
    Complex next = ((Complex(Real(2 * n + 1)) - c) * cur - prev * n) / (n + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Real leading_even(int N, const Real& omega) {
  if (N < 1) throw IndexOutOfRange("leading_even needs N >= 1");
  const long e = 2L * N * N;
  return to_real(power_of_four(static_cast<long>(N) * N) * pow(superfactorial(N - 1), 4)) /
         pow(omega, e);
}

Real leading_odd(int N, const Real& omega) {
  if (N < 0) throw IndexOutOfRange("leading_odd needs N >= 0");
  const BigInt sf = superfactorial(N - 1) * superfactorial(N);
  BigInt c = 2 * power_of_four(static_cast<long>(N) * (N + 1)) * sf * sf;
  if (N % 2 == 1) c = -c;
  return to_real(c) * sin(omega) / pow(omega, 2L * N * (N + 1) + 1);
}

Complex endpoint_monic_limit(int N, const Complex& c, const Real& omega) {
  if (N < 1) throw IndexOutOfRange("endpoint limit needs N >= 1");
  const Complex prefactor = pow(Complex(Real(0), Real(-2)), static_cast<long>(N)) *
                            to_real(factorial(N)) / pow(omega, static_cast<long>(N));
  return prefactor * laguerre(N, c);
}

Complex laguerre_product(int N, const Complex& x, const Real& omega) {
  const Complex scale = pow(Complex(Real(0), Real(1) / omega), 2L * N);
  const Complex minus_i_omega(Real(0), -omega);
  return scale * laguerre(N, minus_i_omega * (x + Complex(Real(1)))) *
         laguerre(N, minus_i_omega * (x - Complex(Real(1))));
}

std::vector<Complex> laguerre_root_prediction(int N, const Real& omega,
                                              const PrecisionPolicy& policy) {
  if (N < 1) throw IndexOutOfRange("Laguerre prediction needs N >= 1");
  policy.validate();
  WorkingPrecision wp(policy.bits);
  const auto c = laguerre_coefficients(N);
  const Real tol = ldexp(Real(1), -(policy.bits - 12));
  auto roots = aberth(c, tol, 200 + 20 * N);
  if (!roots.converged) throw NoConvergence("Laguerre roots did not converge");
  std::vector<Complex> out;
  for (const auto& ck : roots.roots) {
    const Real shift = ck.real() / omega;  // the zeros of L_N are real
    out.emplace_back(Real(-1), shift);
    out.emplace_back(Real(1), shift);
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

Complex GaussianInteger::to_complex() const { return {to_real(re), to_real(im)}; }

GaussianInteger peel_coefficient(int n, int k) {
  if (n < 1) throw IndexOutOfRange("peel coefficient needs n >= 1");
  const int N = n / 2;
  if (k < 0 || k > N) {
    throw IndexOutOfRange("peel coefficient needs 0 <= k <= N, got k = " + std::to_string(k));
  }
  if (n % 2 == 0) {
    const BigInt s = superfactorial(N - k - 1) * superfactorial(N + k - 1);
    return {power_of_four(static_cast<long>(N) * N - static_cast<long>(k) * k) * s * s, 0};
  }
  const BigInt s = superfactorial(N + k) * superfactorial(N - k - 1);
  BigInt v = power_of_four(static_cast<long>(N - k) * (N + k + 1)) * s * s;
  if ((N + k) % 2 == 1) v = -v;
  return {0, v};
}

namespace {

// Initial approximation to W_k(z) in double precision: local Taylor fits on
// the principal branch, the square-root series at -1/e, and the logarithmic
// asymptotic expansion elsewhere.
std::complex<double> lambert_guess(std::complex<double> z, int k) {
  using C = std::complex<double>;
  const double x = z.real();
  const double y = z.imag();
  const int imag_sign = y > 0 ? 1 : (y < 0 ? -1 : 0);
  const double r = -0.36787944117144233;
  C L1;
  if (k == 0) {
    if (-4.0 < y && y < 4.0 && -1.0 < x && x < 2.5) {
      if (imag_sign != 0) {
        if (y > 1.00) return C(0.876, 0.645) + C(0.118, -0.174) * (z - C(0.75, 2.5));
        if (y > 0.25) return C(0.505, 0.204) + C(0.375, -0.132) * (z - C(0.75, 0.5));
        if (y < -1.00) return C(0.876, -0.645) + C(0.118, 0.174) * (z - C(0.75, -2.5));
        if (y < -0.25) return C(0.505, -0.204) + C(0.375, 0.132) * (z - C(0.75, -0.5));
      }
      if (x < -0.5) {
        if (imag_sign >= 0) return C(-0.318, 1.34) + C(-0.697, -0.593) * (z + 1.0);
        return C(-0.318, -1.34) + C(-0.697, 0.593) * (z + 1.0);
      }
      if (x < -0.2) return -1.0 + 2.33164398159712 * std::sqrt(z - r) - 1.81218788563936 * (z - r);
      if (x < 0.5) return z;
      return 0.2 + 0.3 * z;
    }
    L1 = std::log(z);
  } else if (k == -1) {
    if (imag_sign >= 0 && y < 0.1 && -0.6 < x && x < -0.2) {
      return -1.0 - 2.33164398159712 * std::sqrt(z - r) - 1.81218788563936 * (z - r);
    }
    if (imag_sign == 0 && -0.2 <= x && x < 0.0) {
      const double l = std::log(-x);
      return l - std::log(-l);
    }
    L1 = std::log(z) - C(0, imag_sign == 0 && x < 0 ? std::numbers::pi : 2 * std::numbers::pi);
  } else {
    L1 = std::log(z) + C(0, 2 * std::numbers::pi * k);
  }
  const C L2 = std::log(L1);
  return L1 - L2 + L2 / L1 + L2 * (L2 - 2.0) / (2.0 * L1 * L1);
}

}  // namespace

Complex lambert_w(const Complex& z, int branch, const PrecisionPolicy& policy) {
  policy.validate();
  WorkingPrecision wp(policy.bits + 16);
  if (z.is_zero()) {
    if (branch == 0) return Complex(Real(0));
    throw InvalidArgument("W_k(0) is only defined on branch 0");
  }
  const std::complex<double> g = lambert_guess({z.real().to_double(), z.imag().to_double()}, branch);
  if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
    throw NoConvergence("Lambert W argument outside double range");
  }
  Complex w(Real(g.real()), Real(g.imag()));

  const Complex one(Real(1));
  const Real tol = ldexp(Real(1), -(policy.bits - 4));
  for (int it = 0; it < 200; ++it) {
    const Complex ew = exp(w);
    const Complex f = w * ew - z;
    const Complex wp1 = w + one;
    const Complex denom = ew * wp1 - (w + Complex(Real(2))) * f / (wp1 * 2);
    const Complex step = f / denom;
    w -= step;
    if (abs(step) <= tol * max(abs(w), Real(1))) {
      const Real residual = abs(w * exp(w) - z);
      if (residual > effective_tolerance(policy, policy.bits) * abs(z)) break;
      WorkingPrecision out(policy.bits);
      return rounded(w);
    }
  }
  throw NoConvergence("Lambert W branch " + std::to_string(branch) + " did not converge");
}

int peel_phase_count(PeelFamily family, int k) {
  return family == PeelFamily::Odd ? 4 * k + 2 : 4 * k + 4;
}

Complex peel_ratio_raw(PeelFamily family, int N, int k) {
  check_peel_range(N, k);
  const int n = family == PeelFamily::Odd ? 2 * N : 2 * N + 1;
  const Complex a = peel_coefficient(n, k + 1).to_complex();
  const Complex b = peel_coefficient(n, k).to_complex();
  // The ratio is real; a signed zero imaginary part would pick the conjugate root.
  const Complex q = -(a / b);
  const Complex ratio(q.real(), q.imag().is_zero() ? Real(0) : q.imag());
  // Principal branch of the p-th root.
  const Real p(peel_phase_count(family, k));
  return polar(pow(abs(ratio), 1 / p), arg(ratio) / p);
}

Complex peel_ratio_simplified(PeelFamily family, int N, int k) {
  check_peel_range(N, k);
  if (family == PeelFamily::Odd) {
    const Real q = to_real(factorial(N + k)) / to_real(factorial(N - k - 1));
    const Real magnitude = pow(q, Real(1) / (2 * k + 1)) / 2;
    return polar(magnitude, pi() / (4 * k + 2));
  }
  const Real q = to_real(factorial(N + k + 1)) / to_real(factorial(N - k - 1));
  return Complex(pow(q, Real(1) / (2 * k + 2)) / 2);
}

std::vector<PeelPrediction> peel_prediction(PeelFamily family, int N, int k, int ell,
                                            const PrecisionPolicy& policy, int max_branch) {
  check_peel_range(N, k);
  const int phases = peel_phase_count(family, k);
  if (ell < 0 || ell >= phases) {
    throw IndexOutOfRange("phase index must lie in [0, " + std::to_string(phases - 1) + "]");
  }
  policy.validate();
  WorkingPrecision wp(policy.bits);
  // Odd:  omega = -(2k+1) i W(i/(2k+1) R e^{pi i ell/(2k+1)})
  // Even: omega = -2(k+1) i W(i/(2(k+1)) R e^{pi i ell/(2k+2)})
  const int q = family == PeelFamily::Odd ? 2 * k + 1 : 2 * k + 2;
  const Complex ratio = peel_ratio_simplified(family, N, k);
  const Complex arg_w = Complex(Real(0), Real(1) / q) * ratio * polar(Real(1), pi() * ell / q);
  std::vector<PeelPrediction> out;
  for (int b = -max_branch; b <= max_branch; ++b) {
    Complex w;
    try {
      w = lambert_w(arg_w, b, policy);
    } catch (const NoConvergence&) {
      continue;
    }
    const Complex omega = Complex(Real(0), Real(-q)) * w;
    // Open quadrant: values on an axis up to rounding are excluded.
    const Real edge = ldexp(abs(omega), -(policy.bits / 2));
    if (omega.real() > edge && omega.imag() > edge) {
      out.push_back({family, N, k, ell, b, omega, family == PeelFamily::Odd ? 2 * N - 1 : 2 * N});
    }
  }
  return out;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  BigInt previous = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt pascal_det_check(int s) {
  if (s < 0) throw IndexOutOfRange("Pascal size must be >= 0");
  std::vector<std::vector<BigInt>> a(static_cast<size_t>(s), std::vector<BigInt>(static_cast<size_t>(s)));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = binomial(i + j, j);
  return bareiss_determinant(std::move(a));
}

BigInt c_matrix_det_check(int N, int s) {
  if (N < 0 || s < 0 || s > N) throw IndexOutOfRange("C matrix needs 0 <= s <= N");
  std::vector<std::vector<BigInt>> a(static_cast<size_t>(N), std::vector<BigInt>(static_cast<size_t>(N)));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          i < N - s ? binomial(i + j, i) : binomial(i + j + 1, i + 1);
    }
  }
  return bareiss_determinant(std::move(a));
}

}  // namespace kp
