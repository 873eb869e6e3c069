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

#include <vector>

#include "kissing/hankel.hpp"

namespace kp {

/// p_n, coefficients constant term first, coeffs[n] = 1.
struct MonicPolynomial {
  int degree = 0;
  std::vector<Complex> coeffs;
  Complex omega;
};

/// h_{n-1} p_n, defined for every omega. The leading coefficient is
/// h_{n-1} and may vanish.
struct TildePolynomial {
  int nominal_degree = 0;
  std::vector<Complex> coeffs;
  Complex omega;

  /// Largest k with |c_k| > threshold * max_j |c_j|.
  int numerical_degree(const Real& threshold) const;
};

struct RecurrenceCoefficients {
  std::vector<Complex> alphas;  ///< alpha_0..alpha_{m-1}
  std::vector<Complex> betas;   ///< beta_1..beta_{m-1}; betas[0] is beta_1
  Complex omega;

  const Complex& beta(int n) const { return betas.at(static_cast<size_t>(n - 1)); }
};

/// p_n exists at omega iff |h_{n-1}| exceeds this multiple of the envelope.
inline constexpr double kDegeneracyThreshold = 1e-15;

/// Solves H_{n-1} c = -(mu_n..mu_{2n-1}). Throws NearSingular(n - 1) when
/// h_{n-1} is below the degeneracy threshold, CrossCheckFailed when the
/// orthogonality residuals exceed rel_tol.
MonicPolynomial monic_op(int n, const Complex& omega, const PrecisionPolicy& policy);

/// Cofactor expansion of the determinant formula along its column of
/// powers of x.
TildePolynomial tilde_op(int n, const Complex& omega, const PrecisionPolicy& policy);

/// alpha_n, beta_n from Hankel determinants and their first derivatives,
/// cross-checked against bilinear Stieltjes quotients.
RecurrenceCoefficients recurrence_coeffs(int m, const Real& omega, const PrecisionPolicy& policy);

/// Largest relative mismatch between central differences of alpha_n, beta_n
/// (step `step`) and the right-hand sides i(beta_{n+1} - beta_n),
/// i beta_n (alpha_n - alpha_{n-1}), over n < m.
Real dd_residual(int m, const Real& omega, const PrecisionPolicy& policy, const Real& step);

Complex evaluate(const MonicPolynomial& p, const Complex& z);
Complex evaluate(const TildePolynomial& p, const Complex& z);

/// max_k |sum_j c_j mu_{j+k}| over k < n, relative to ||c|| max |mu|.
Real orthogonality_residual(const MonicPolynomial& p, const MomentSequence& mu);

/// Coefficient residual of
///   h_{n-1}^2 pt_{n+1} - (h_n h_{n-1} x + i(h_n' h_{n-1} - h_{n-1}' h_n)) pt_n + h_n^2 pt_{n-1}
/// relative to the largest of the three terms.
Real hankel_recurrence_residual(int n, const Real& omega, const PrecisionPolicy& policy);

/// Max-norm of a coefficient vector.
Real coefficient_norm(const std::vector<Complex>& c);

}  // namespace kp
