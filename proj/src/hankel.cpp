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

#include "kissing/hankel.hpp"

#include <cmath>
#include <string>

namespace kp {

namespace {

// SF(m) = prod_{i<=m} i!, SF(-1) = SF(0) = 1.
Real superfactorial_real(int m) {
  Real sf(1);
  Real fact(1);
  for (int i = 1; i <= m; ++i) {
    fact *= i;
    sf *= fact;
  }
  return sf;
}

// Leading-order magnitude from the even/odd index formulas, without the
// sin factor.
Real asymptotic_magnitude(int n, const Real& w) {
  if (n % 2 == 1) {
    const int N = (n + 1) / 2;
    Real sf = superfactorial_real(N - 1);
    return ldexp(pow(sf, 4L), 2L * N * N) / pow(w, 2L * N * N);
  }
  const int N = n / 2;
  Real sf = superfactorial_real(N - 1) * superfactorial_real(N);
  return ldexp(sf * sf, 2L * N * (N + 1) + 1) / pow(w, 2L * N * (N + 1) + 1);
}

Complex matrix_det(const ComplexMatrix& m) { return PartialPivLU<Complex>(m).determinant(); }

long inner_bits(long bits, int n, const Complex& omega) {
  return bits + hankel_guard_bits(n, omega) + moment_guard_bits(omega) / 4;
}

Complex derivative_at(int n, const Complex& omega, int order, long bits,
                      const PrecisionPolicy& policy) {
  const long inner = inner_bits(bits, n, omega);
  WorkingPrecision wp(inner);
  MomentSequence mu = moments(2 * n + order, omega, policy.with_bits(inner));
  return hankel_derivative_kernel(mu, n, order);
}

void check_order(int order) {
  if (order < 0 || order > 2) {
    throw InvalidArgument("derivative order must be 0, 1 or 2, got " + std::to_string(order));
  }
}

void check_index(int n) {
  if (n < -1) throw IndexOutOfRange("Hankel index must be >= -1, got " + std::to_string(n));
}

}  // namespace

Real legendre_hankel(int n) {
  Real h(1);
  Real jf(1);   // j!
  Real j2f(1);  // (2j)!
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      jf *= j;
      j2f *= 2 * j - 1;
      j2f *= 2 * j;
    }
    h *= ldexp(pow(jf, 4L), 2L * j + 1) / (j2f * j2f * (2 * j + 1));
  }
  return h;
}

Real envelope(int n, const Complex& omega) {
  if (n < 0) return Real(1);
  const Real w = abs(omega);
  Real env = legendre_hankel(n);
  if (!w.is_zero()) env = min(env, asymptotic_magnitude(n, w));
  if (!omega.imag().is_zero()) env *= exp(abs(omega.imag()) * (n + 1));
  return env;
}

long hankel_guard_bits(int n, const Complex& omega) {
  if (n < 0) return 16;
  WorkingPrecision wp(128);
  const Real w = abs(omega);
  if (w.is_zero()) return 16;
  const Real loss = log2(legendre_hankel(n) / min(legendre_hankel(n), asymptotic_magnitude(n, w)));
  const double extra = 1.4426950408889634 * abs(omega.imag()).to_double() * (n + 1);
  return static_cast<long>(std::ceil(loss.to_double() + extra)) + 16;
}

ComplexMatrix hankel_matrix(const MomentSequence& mu, int n, int order) {
  ComplexMatrix h(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) h(j, k) = moment_derivative(mu, j + k, order);
  }
  return h;
}

Complex hankel_derivative_kernel(const MomentSequence& mu, int n, int order) {
  check_order(order);
  if (n < 0) return order == 0 ? Complex(Real(1)) : Complex(Real(0));
  const ComplexMatrix h0 = hankel_matrix(mu, n, 0);
  if (order == 0) return matrix_det(h0);
  const ComplexMatrix h1 = hankel_matrix(mu, n, 1);
  Complex total(Real(0));
  for (int r = 0; r <= n; ++r) {
    ComplexMatrix m = h0;
    m.row(r) = (order == 1 ? h1 : hankel_matrix(mu, n, 2)).row(r);
    total += matrix_det(m);
  }
  if (order == 2) {
    Complex cross(Real(0));
    for (int r = 0; r <= n; ++r) {
      for (int s = r + 1; s <= n; ++s) {
        ComplexMatrix m = h0;
        m.row(r) = h1.row(r);
        m.row(s) = h1.row(s);
        cross += matrix_det(m);
      }
    }
    total += cross * 2;
  }
  return total;
}

HankelView hankel_view(int n, const Complex& omega, const PrecisionPolicy& policy) {
  if (n < 0) throw IndexOutOfRange("Hankel view needs n >= 0, got " + std::to_string(n));
  WorkingPrecision wp(policy.bits);
  MomentSequence mu = moments(2 * n, omega, policy);
  HankelView view{n, mu.omega, hankel_matrix(mu, n), Complex(Real(0)), policy};
  view.det = matrix_det(view.entries);
  return view;
}

Complex hankel_det_derivative_complex(int n, const Complex& omega, int order,
                                      const PrecisionPolicy& policy) {
  check_order(order);
  check_index(n);
  policy.validate();
  if (n < 0) return order == 0 ? Complex(Real(1)) : Complex(Real(0));
  WorkingPrecision wp(policy.bits);
  const Real floor = envelope(n, omega);
  auto result = adaptive_eval(
      [&](long bits) { return derivative_at(n, omega, order, bits, policy); }, policy, floor);
  return result.value;
}

Complex hankel_det_complex(int n, const Complex& omega, const PrecisionPolicy& policy) {
  return hankel_det_derivative_complex(n, omega, 0, policy);
}

namespace {

// Adaptive evaluation plus the reality check, escalating precision when the
// imaginary part is not yet negligible.
AdaptiveResult real_valued(int n, const Real& omega, int order, const PrecisionPolicy& policy) {
  policy.validate();
  PrecisionPolicy p = policy;
  for (;;) {
    WorkingPrecision wp(p.bits);
    const Complex w(omega);
    const Real floor = envelope(n, w);
    AdaptiveResult r =
        adaptive_eval([&](long bits) { return derivative_at(n, w, order, bits, p); }, p, floor);
    const Real scale = max(abs(r.value), floor);
    if (abs(r.value.imag()) <= Real(p.rel_tol) * scale) return r;
    if (2 * p.bits > p.max_bits) {
      throw RealityCheckFailed("Im h_" + std::to_string(n) + " = " + r.value.imag().to_string(6) +
                               " at omega = " + omega.to_string(20));
    }
    p.bits *= 2;
  }
}

}  // namespace

HankelDet hankel_det(int n, const Real& omega, const PrecisionPolicy& policy) {
  check_index(n);
  if (n < 0) return {Real(1), Complex(Real(1)), policy.bits};
  AdaptiveResult r = real_valued(n, omega, 0, policy);
  return {r.value.real(), r.value, r.bits};
}

std::vector<Real> hankel_dets(int nmax, const Real& omega, const PrecisionPolicy& policy) {
  check_index(nmax);
  policy.validate();
  WorkingPrecision wp(policy.bits);
  const Complex w(omega);
  std::vector<Real> floors;
  for (int j = 0; j <= nmax; ++j) floors.push_back(envelope(j, w));

  auto family = [&](long bits) {
    const long inner = inner_bits(bits, nmax, w);
    WorkingPrecision high(inner);
    const MomentSequence mu = moments(2 * nmax, w, policy.with_bits(inner));
    std::vector<Complex> dets;
    for (int j = 0; j <= nmax; ++j) dets.push_back(matrix_det(hankel_matrix(mu, j)));
    return dets;
  };

  long bits = policy.bits;
  std::vector<Complex> previous = family(bits);
  while (2 * bits <= policy.max_bits) {
    bits *= 2;
    std::vector<Complex> current = family(bits);
    WorkingPrecision high(bits);
    bool agree = true;
    for (int j = 0; j <= nmax && agree; ++j) {
      const auto uj = static_cast<size_t>(j);
      const Real scale = max(max(abs(current[uj]), abs(previous[uj])), floors[uj]);
      agree = abs(current[uj] - previous[uj]) <= Real(policy.rel_tol) * scale &&
              abs(current[uj].imag()) <= Real(policy.rel_tol) * scale;
    }
    if (agree) {
      std::vector<Real> out;
      for (auto& z : current) out.push_back(z.real());
      return out;
    }
    previous = std::move(current);
  }
  throw PrecisionExhausted("Hankel determinants up to h_" + std::to_string(nmax) +
                           " did not settle below " + std::to_string(policy.max_bits) + " bits");
}

Real hankel_det_derivative(int n, const Real& omega, int order, const PrecisionPolicy& policy) {
  check_order(order);
  check_index(n);
  if (n < 0) return Real(order == 0 ? 1 : 0);
  return real_valued(n, omega, order, policy).value.real();
}

Real toda_residual(int n, const Real& omega, const PrecisionPolicy& policy) {
  if (n < 1) throw IndexOutOfRange("Toda residual needs n >= 1, got " + std::to_string(n));
  const Real h = hankel_det(n, omega, policy).value;
  const Real d1 = hankel_det_derivative(n, omega, 1, policy);
  const Real d2 = hankel_det_derivative(n, omega, 2, policy);
  const Real below = hankel_det(n - 1, omega, policy).value;
  const Real above = hankel_det(n + 1, omega, policy).value;
  WorkingPrecision wp(2 * policy.bits);
  const Real a = d2 * h;
  const Real b = d1 * d1;
  const Real c = below * above;
  const Real scale = max(max(abs(a), abs(b)), abs(c));
  if (scale.is_zero()) return Real(0);
  return abs(a - b + c) / scale;
}

ComplexVector monic_coefficients(const MomentSequence& mu, int n) {
  ComplexVector c(n + 1);
  c(n) = Complex(Real(1));
  if (n == 0) return c;
  ComplexMatrix h(n, n);
  ComplexVector rhs(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) h(j, k) = mu[j + k];
    rhs(j) = -mu[j + n];
  }
  c.head(n) = PartialPivLU<Complex>(h).solve(rhs);
  return c;
}

Real product_formula_det(int n, const Real& omega, const PrecisionPolicy& policy) {
  if (n < 1) throw IndexOutOfRange("product formula needs n >= 1, got " + std::to_string(n));
  policy.validate();
  const Complex w(omega);
  std::vector<Real> h(static_cast<size_t>(n + 1));  // h[j + 1] = h_j
  h[0] = Real(1);
  for (int j = 0; j < n; ++j) {
    h[static_cast<size_t>(j + 1)] = hankel_det(j, omega, policy).value;
    if (j + 1 < n) {
      WorkingPrecision wp(policy.bits);
      if (abs(h[static_cast<size_t>(j + 1)]) <= Real(1e-15) * envelope(j, w)) {
        throw SingularChain("h_" + std::to_string(j) + " vanishes at omega = " +
                            omega.to_string(20));
      }
    }
  }

  const long inner = inner_bits(policy.bits, n - 1, w) + 32;
  WorkingPrecision wp(inner);
  const MomentSequence mu = moments(2 * n, w, policy.with_bits(inner));
  const Real tol = effective_tolerance(policy, policy.bits);
  Complex product(Real(1));
  for (int j = 0; j < n; ++j) {
    const ComplexVector c = monic_coefficients(mu, j);
    Complex kappa(Real(0));
    for (int a = 0; a <= j; ++a) {
      for (int b = 0; b <= j; ++b) kappa += c(a) * c(b) * mu[a + b];
    }
    const Real ratio = h[static_cast<size_t>(j + 1)] / h[static_cast<size_t>(j)];
    const Real scale = max(abs(kappa), envelope(j, w) / envelope(j - 1, w));
    if (abs(kappa - Complex(ratio)) > tol * scale) {
      throw CrossCheckFailed("kappa_" + std::to_string(j) + " from moments " +
                             kappa.real().to_string(20) + " vs Hankel ratio " +
                             ratio.to_string(20));
    }
    product *= kappa;
  }
  WorkingPrecision out(policy.bits);
  return rounded(product.real());
}

}  // namespace kp
