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

#include "kissing/moments.hpp"

#include <cmath>
#include <string>

namespace kp {

namespace {

Complex power_of_i(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return Complex(Real(1));
    case 1:
      return imag_unit();
    case 2:
      return Complex(Real(-1));
    default:
      return -imag_unit();
  }
}

// t_j = (i omega)^j / j!, summed against 2 / (n + j + 1) for n + j even.
std::vector<Complex> series_moments(int m, const Complex& omega, long bits) {
  WorkingPrecision wp(bits);
  const Complex w = rounded(omega);
  const bool real_omega = w.imag().is_zero();
  const Real radius = abs(w);
  const Real cutoff = ldexp(Real(1), -bits);

  std::vector<Complex> sums(static_cast<size_t>(m + 1), Complex(Real(0)));
  Complex term(Real(1));
  for (long j = 0;; ++j) {
    for (int n = static_cast<int>(j % 2); n <= m; n += 2) {
      sums[static_cast<size_t>(n)] += term * 2 / (n + j + 1);
    }
    // Past j > 2|omega| the ratio of consecutive terms is below 1/2, so the
    // tail is bounded by twice the next term.
    if (Real(j) > 2 * radius + 1 && abs1(term) < cutoff) break;
    term = real_omega ? times_i(term * w.real()) : times_i(term * w);
    term /= j + 1;
  }
  return sums;
}

std::vector<Complex> recurrence_moments(int m, const Complex& omega, long bits) {
  WorkingPrecision wp(bits);
  const Complex w = rounded(omega);
  const Complex iw = times_i(w);
  const Complex ep = exp(iw);
  const Complex em = exp(-iw);
  std::vector<Complex> mu(static_cast<size_t>(m + 1));
  for (int n = 0; n <= m; ++n) {
    Complex boundary = (n % 2 == 0 ? ep - em : ep + em) / iw;
    if (n == 0) {
      mu[0] = std::move(boundary);
    } else {
      mu[static_cast<size_t>(n)] = boundary - mu[static_cast<size_t>(n - 1)] * n / iw;
    }
  }
  return mu;
}

}  // namespace

long moment_guard_bits(const Complex& omega) {
  WorkingPrecision wp(64);
  return static_cast<long>(std::ceil(1.4426950408889634 * abs(omega).to_double())) + 32;
}

MomentSequence moments(int m, const Complex& omega, const PrecisionPolicy& policy) {
  policy.validate();
  if (m < 0) throw InvalidArgument("moment degree must be >= 0, got " + std::to_string(m));
  const long bits = policy.bits;
  const long inner = bits + moment_guard_bits(omega);

  std::vector<Complex> series = series_moments(m, omega, inner);

  WorkingPrecision wp(bits);
  if (abs(omega) > Real(m)) {
    std::vector<Complex> check = recurrence_moments(m, omega, inner);
    const Real tol = effective_tolerance(policy, bits);
    const Real floor = Real(2) / abs(omega);
    for (int n = 0; n <= m; ++n) {
      const Complex& a = series[static_cast<size_t>(n)];
      const Complex& b = check[static_cast<size_t>(n)];
      const Real gap = abs(a - b);
      if (gap > tol * (abs(a) + floor)) {
        throw CrossCheckFailed("moment " + std::to_string(n) + " series and recurrence differ by " +
                               gap.to_string(6));
      }
    }
  }

  MomentSequence seq{rounded(omega), {}, policy};
  seq.values.reserve(series.size());
  for (auto& v : series) seq.values.push_back(rounded(v));
  return seq;
}

MomentSequence moments(int m, const Real& omega, const PrecisionPolicy& policy) {
  return moments(m, Complex(omega), policy);
}

Complex moment_derivative(const MomentSequence& seq, int n, int k) {
  if (n < 0 || k < 0 || n + k > seq.degree()) {
    throw IndexOutOfRange("derivative order " + std::to_string(k) + " of moment " +
                          std::to_string(n) + " needs mu_" + std::to_string(n + k) +
                          ", sequence ends at mu_" + std::to_string(seq.degree()));
  }
  return power_of_i(k) * seq[n + k];
}

}  // namespace kp
