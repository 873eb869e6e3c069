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

#include "kissing/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kissing/polynomial.hpp"

namespace kp {

namespace {

long extra_bits_for(const Real& h, const Real& env) {
  if (h.is_zero()) return 64;
  WorkingPrecision wp(64);
  const double ratio = log2(env / abs(h)).to_double();
  return ratio > 0 ? static_cast<long>(std::ceil(ratio)) : 0;
}

std::vector<Complex> to_std(const ComplexVector& v) {
  return std::vector<Complex>(v.data(), v.data() + v.size());
}

std::vector<Complex> rounded_all(std::vector<Complex> v) {
  for (auto& z : v) z = rounded(z);
  return v;
}

}  // namespace

int TildePolynomial::numerical_degree(const Real& threshold) const {
  const Real cut = threshold * coefficient_norm(coeffs);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    if (abs(coeffs[static_cast<size_t>(k)]) > cut) return k;
  }
  return -1;
}

Real coefficient_norm(const std::vector<Complex>& c) {
  Real m(0);
  for (const auto& z : c) m = max(m, abs(z));
  return m;
}

Real orthogonality_residual(const MonicPolynomial& p, const MomentSequence& mu) {
  const int n = p.degree;
  Real mu_scale(0);
  for (int k = 0; k < 2 * n; ++k) mu_scale = max(mu_scale, abs(mu[k]));
  const Real scale = coefficient_norm(p.coeffs) * mu_scale;
  Real worst(0);
  for (int k = 0; k < n; ++k) {
    Complex r(Real(0));
    for (int j = 0; j <= n; ++j) r += p.coeffs[static_cast<size_t>(j)] * mu[j + k];
    worst = max(worst, abs(r));
  }
  return scale.is_zero() ? worst : worst / scale;
}

MonicPolynomial monic_op(int n, const Complex& omega, const PrecisionPolicy& policy) {
  if (n < 0) throw IndexOutOfRange("degree must be >= 0, got " + std::to_string(n));
  policy.validate();
  WorkingPrecision wp(policy.bits);
  if (n == 0) return {0, {Complex(Real(1))}, omega};

  const Complex h = hankel_det_complex(n - 1, omega, policy);
  const Real env = envelope(n - 1, omega);
  if (abs(h) <= Real(kDegeneracyThreshold) * env) {
    throw NearSingular(n - 1, "h_" + std::to_string(n - 1) + " = " + abs(h).to_string(6) +
                                  " is below the degeneracy threshold; p_" + std::to_string(n) +
                                  " does not exist");
  }
  const long extra = hankel_guard_bits(n - 1, omega) + extra_bits_for(abs(h), env) + 32;
  auto solved = adaptive_eval_vector(
      [&](long bits) {
        WorkingPrecision inner(bits + extra);
        const MomentSequence mu = moments(2 * n - 1, omega, policy.with_bits(bits + extra));
        return to_std(monic_coefficients(mu, n));
      },
      policy);

  MonicPolynomial p{n, rounded_all(std::move(solved.values)), rounded(omega)};
  p.coeffs[static_cast<size_t>(n)] = Complex(Real(1));

  const long check_bits = policy.bits + extra;
  WorkingPrecision check(check_bits);
  const MomentSequence mu = moments(2 * n - 1, omega, policy.with_bits(check_bits));
  const Real residual = orthogonality_residual(p, mu);
  if (residual > effective_tolerance(policy, policy.bits)) {
    throw CrossCheckFailed("orthogonality residual " + residual.to_string(6) + " for p_" +
                           std::to_string(n));
  }
  return p;
}

TildePolynomial tilde_op(int n, const Complex& omega, const PrecisionPolicy& policy) {
  if (n < 0) throw IndexOutOfRange("degree must be >= 0, got " + std::to_string(n));
  policy.validate();
  WorkingPrecision wp(policy.bits);
  if (n == 0) return {0, {Complex(Real(1))}, omega};

  const long extra = hankel_guard_bits(n, omega) + 32;
  auto cof = adaptive_eval_vector(
      [&](long bits) {
        WorkingPrecision inner(bits + extra);
        const MomentSequence mu = moments(2 * n - 1, omega, policy.with_bits(bits + extra));
        std::vector<Complex> c(static_cast<size_t>(n + 1));
        for (int k = 0; k <= n; ++k) {
          ComplexMatrix minor(n, n);
          for (int i = 0, row = 0; i <= n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < n; ++j) minor(row, j) = mu[i + j];
            ++row;
          }
          Complex d = PartialPivLU<Complex>(minor).determinant();
          c[static_cast<size_t>(k)] = (n + k) % 2 == 0 ? d : -d;
        }
        return c;
      },
      policy);
  return {n, rounded_all(std::move(cof.values)), rounded(omega)};
}

RecurrenceCoefficients recurrence_coeffs(int m, const Real& omega, const PrecisionPolicy& policy) {
  if (m < 1) throw IndexOutOfRange("recurrence needs m >= 1, got " + std::to_string(m));
  policy.validate();
  WorkingPrecision wp(policy.bits);
  const Complex w(omega);

  // h[j + 1] = h_j, d[j + 1] = h_j' for j = -1..m-1.
  std::vector<Real> h(static_cast<size_t>(m + 1));
  std::vector<Real> d(static_cast<size_t>(m + 1));
  h[0] = Real(1);
  d[0] = Real(0);
  long extra = 0;
  for (int j = 0; j < m; ++j) {
    h[static_cast<size_t>(j + 1)] = hankel_det(j, omega, policy).value;
    const Real env = envelope(j, w);
    if (abs(h[static_cast<size_t>(j + 1)]) <= Real(kDegeneracyThreshold) * env) {
      throw NearSingular(j, "h_" + std::to_string(j) + " vanishes at omega = " +
                                omega.to_string(20));
    }
    d[static_cast<size_t>(j + 1)] = hankel_det_derivative(j, omega, 1, policy);
    extra = std::max(extra, hankel_guard_bits(j, w) + extra_bits_for(h[static_cast<size_t>(j + 1)], env));
  }

  RecurrenceCoefficients rc{{}, {}, w};
  std::vector<Real> log_deriv(static_cast<size_t>(m + 1));
  for (int j = 0; j <= m; ++j) {
    log_deriv[static_cast<size_t>(j)] = d[static_cast<size_t>(j)] / h[static_cast<size_t>(j)];
  }
  for (int n = 0; n < m; ++n) {
    const Real diff = log_deriv[static_cast<size_t>(n + 1)] - log_deriv[static_cast<size_t>(n)];
    rc.alphas.emplace_back(Real(0), -diff);
  }
  for (int n = 1; n < m; ++n) {
    const Real& hn1 = h[static_cast<size_t>(n)];
    rc.betas.emplace_back(h[static_cast<size_t>(n + 1)] * h[static_cast<size_t>(n - 1)] / (hn1 * hn1));
  }

  // Stieltjes quotients with the bilinear form <f, g> = sum f_j g_k mu_{j+k}.
  const long inner = policy.bits + extra + 32;
  WorkingPrecision high(inner);
  const MomentSequence mu = moments(2 * m, w, policy.with_bits(inner));
  const Real tol = effective_tolerance(policy, policy.bits);
  Complex previous_norm(Real(1));
  for (int n = 0; n < m; ++n) {
    const ComplexVector c = monic_coefficients(mu, n);
    Complex norm(Real(0));
    Complex moment1(Real(0));
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        const Complex cc = c(a) * c(b);
        norm += cc * mu[a + b];
        moment1 += cc * mu[a + b + 1];
      }
    }
    const Complex alpha = moment1 / norm;
    const Real alpha_scale = abs(alpha) + abs(log_deriv[static_cast<size_t>(n + 1)]) +
                             abs(log_deriv[static_cast<size_t>(n)]);
    if (abs(alpha - rc.alphas[static_cast<size_t>(n)]) > tol * alpha_scale) {
      throw CrossCheckFailed("alpha_" + std::to_string(n) + ": Hankel and Stieltjes values differ");
    }
    if (n > 0) {
      const Complex beta = norm / previous_norm;
      if (abs(beta - rc.betas[static_cast<size_t>(n - 1)]) > tol * abs(beta)) {
        throw CrossCheckFailed("beta_" + std::to_string(n) + ": Hankel and Stieltjes values differ");
      }
    }
    previous_norm = norm;
  }

  WorkingPrecision out(policy.bits);
  for (auto& a : rc.alphas) a = rounded(a);
  for (auto& b : rc.betas) b = rounded(b);
  return rc;
}

Real dd_residual(int m, const Real& omega, const PrecisionPolicy& policy, const Real& step) {
  if (m < 1) throw IndexOutOfRange("dd_residual needs m >= 1, got " + std::to_string(m));
  WorkingPrecision wp(policy.bits);
  const RecurrenceCoefficients up = recurrence_coeffs(m, omega + step, policy);
  const RecurrenceCoefficients down = recurrence_coeffs(m, omega - step, policy);
  const RecurrenceCoefficients mid = recurrence_coeffs(m + 1, omega, policy);
  const Complex i = imag_unit();
  auto beta_at = [&](int n) { return n == 0 ? Complex(Real(0)) : mid.beta(n); };

  Real worst(0);
  for (int n = 0; n < m; ++n) {
    const auto un = static_cast<size_t>(n);
    const Complex fd = (up.alphas[un] - down.alphas[un]) / (2 * step);
    const Complex rhs = i * (beta_at(n + 1) - beta_at(n));
    const Real scale = max(abs(fd), abs(beta_at(n + 1)) + abs(beta_at(n)));
    if (!scale.is_zero()) worst = max(worst, abs(fd - rhs) / scale);
  }
  for (int n = 1; n < m; ++n) {
    const Complex fd = (up.beta(n) - down.beta(n)) / (2 * step);
    const auto un = static_cast<size_t>(n);
    const Complex rhs = i * mid.beta(n) * (mid.alphas[un] - mid.alphas[un - 1]);
    const Real scale = abs(mid.beta(n)) * (1 + abs(mid.alphas[un]) + abs(mid.alphas[un - 1]));
    if (!scale.is_zero()) worst = max(worst, abs(fd - rhs) / scale);
  }
  return worst;
}

Complex evaluate(const MonicPolynomial& p, const Complex& z) { return horner(p.coeffs, z); }

Complex evaluate(const TildePolynomial& p, const Complex& z) { return horner(p.coeffs, z); }

Real hankel_recurrence_residual(int n, const Real& omega, const PrecisionPolicy& policy) {
  if (n < 1) throw IndexOutOfRange("recurrence residual needs n >= 1, got " + std::to_string(n));
  WorkingPrecision wp(policy.bits);
  const Complex w(omega);
  const TildePolynomial next = tilde_op(n + 1, w, policy);
  const TildePolynomial cur = tilde_op(n, w, policy);
  const TildePolynomial prev = tilde_op(n - 1, w, policy);
  const Real hn = hankel_det(n, omega, policy).value;
  const Real hm = hankel_det(n - 1, omega, policy).value;
  const Real dn = hankel_det_derivative(n, omega, 1, policy);
  const Real dm = hankel_det_derivative(n - 1, omega, 1, policy);

  const Complex shift(Real(0), dn * hm - dm * hn);
  const Real lead = hn * hm;
  std::vector<Complex> a(static_cast<size_t>(n + 2)), b(a.size()), c(a.size());
  for (size_t k = 0; k < a.size(); ++k) {
    a[k] = next.coeffs[k] * (hm * hm);
    b[k] = k < cur.coeffs.size() ? cur.coeffs[k] * shift : Complex(Real(0));
    if (k >= 1) b[k] += cur.coeffs[k - 1] * lead;
    c[k] = k < prev.coeffs.size() ? prev.coeffs[k] * (hn * hn) : Complex(Real(0));
  }
  Real worst(0);
  for (size_t k = 0; k < a.size(); ++k) worst = max(worst, abs(a[k] - b[k] + c[k]));
  const Real scale = max(max(coefficient_norm(a), coefficient_norm(b)), coefficient_norm(c));
  return scale.is_zero() ? worst : worst / scale;
}

}  // namespace kp
