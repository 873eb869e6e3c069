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

#include "kissing/dense.hpp"
#include "kissing/moments.hpp"

namespace kp {

/// H_n = [mu_{j+k}], j, k = 0..n, and its determinant at one precision.
struct HankelView {
  int n = 0;
  Complex omega;
  ComplexMatrix entries;
  Complex det;
  PrecisionPolicy policy;
};

/// Builds H_n at omega without escalation or checks.
HankelView hankel_view(int n, const Complex& omega, const PrecisionPolicy& policy);

struct HankelDet {
  Real value;  ///< h_n, real for real omega
  Complex raw; ///< the complex determinant before the reality check
  long bits;   ///< precision at which the value was accepted
};

/// h_n(omega) for real omega, h_{-1} = 1. The determinant is evaluated
/// adaptively; the imaginary part must vanish to rel_tol relative to
/// max(|h_n|, envelope), else precision is raised and finally
/// RealityCheckFailed is thrown.
HankelDet hankel_det(int n, const Real& omega, const PrecisionPolicy& policy);

/// h_n at complex omega (no reality constraint).
Complex hankel_det_complex(int n, const Complex& omega, const PrecisionPolicy& policy);

/// h_0..h_nmax at real omega from one shared moment sequence. Each entry
/// is accepted once two precisions agree to rel_tol relative to
/// max(|h_j|, envelope_j).
std::vector<Real> hankel_dets(int nmax, const Real& omega, const PrecisionPolicy& policy);

/// d^k h_n / domega^k for k in {0, 1, 2}, summing determinants with rows
/// replaced by their entrywise derivatives.
Real hankel_det_derivative(int n, const Real& omega, int order, const PrecisionPolicy& policy);
Complex hankel_det_derivative_complex(int n, const Complex& omega, int order,
                                      const PrecisionPolicy& policy);

/// |h'' h - h'^2 + h_{n-1} h_{n+1}| over the largest of the three terms.
Real toda_residual(int n, const Real& omega, const PrecisionPolicy& policy);

/// prod_{j<n} kappa_j with kappa_j = int p_j^2 exp(i omega x) dx expanded in
/// moments; each factor is checked against h_j / h_{j-1}. Throws
/// SingularChain when an intermediate h_j vanishes.
Real product_formula_det(int n, const Real& omega, const PrecisionPolicy& policy);

/// h_n(0) = prod_{j<=n} 2^{2j+1} (j!)^4 / ((2j)!^2 (2j+1)).
Real legendre_hankel(int n);

/// Leading-order magnitude of h_n at |omega|, capped by h_n(0) and scaled
/// by exp((n+1)|Im omega|). The reference scale for tolerances near zeros.
Real envelope(int n, const Complex& omega);

/// Bits lost to cancellation in h_n at omega, estimated from the envelope.
long hankel_guard_bits(int n, const Complex& omega);

/// Entrywise derivative of the Hankel matrix: [i^k mu_{j+k'+k}].
ComplexMatrix hankel_matrix(const MomentSequence& mu, int n, int order = 0);

/// Raw d^order h_n from a moment sequence with at least 2n + order + 1
/// entries, at the working precision.
Complex hankel_derivative_kernel(const MomentSequence& mu, int n, int order);

/// Coefficients c_0..c_n (c_n = 1) of the monic polynomial orthogonal to
/// 1..x^{n-1}, from H_{n-1} c = -(mu_n..mu_{2n-1}). H_{n-1} must be
/// nonsingular.
ComplexVector monic_coefficients(const MomentSequence& mu, int n);

}  // namespace kp
