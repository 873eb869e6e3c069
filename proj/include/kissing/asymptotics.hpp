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

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "kissing/numerics.hpp"

namespace kp {

using BigInt = boost::multiprecision::cpp_int;

/// SF(m) = prod_{i=1}^m i!, with SF(-1) = SF(0) = 1 (Barnes G(m + 2)).
BigInt superfactorial(int m);
BigInt factorial(int m);
BigInt binomial(int n, int k);

/// L_N(c) = sum_{s=0}^N binom(N, s) (-c)^s / s!.
Complex laguerre(int N, const Complex& c);
/// L_N(c) from (n + 1) L_{n+1} = (2n + 1 - c) L_n - n L_{n-1}.
Complex laguerre_recurrence(int N, const Complex& c);
/// Coefficients of L_N, constant term first.
std::vector<Complex> laguerre_coefficients(int N);

/// Leading term of h_{2N-1}: 4^{N^2} SF(N-1)^4 / omega^{2N^2}.
Real leading_even(int N, const Real& omega);
/// Leading term of h_{2N}:
/// 2 (-1)^N 4^{N(N+1)} SF(N-1)^2 SF(N)^2 sin(omega) / omega^{2N(N+1)+1}.
Real leading_odd(int N, const Real& omega);

/// ((-2i)^N N! / omega^N) L_N(c), the leading order of p_{2N}(1 - c/(i omega)).
Complex endpoint_monic_limit(int N, const Complex& c, const Real& omega);
/// (i/omega)^{2N} L_N(-i omega (x + 1)) L_N(-i omega (x - 1)).
Complex laguerre_product(int N, const Complex& x, const Real& omega);

/// The 2N points +-1 + i c_k / omega over the zeros c_k of L_N, ordered by
/// real part then imaginary part.
std::vector<Complex> laguerre_root_prediction(int N, const Real& omega,
                                              const PrecisionPolicy& policy);

struct GaussianInteger {
  BigInt re;
  BigInt im;
  Complex to_complex() const;
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

/// c_{n,k}: for n = 2N, 4^{N^2-k^2} [SF(N-k-1) SF(N+k-1)]^2; for n = 2N+1,
/// i (-1)^{N+k} 4^{(N-k)(N+k+1)} [SF(N+k) SF(N-k-1)]^2. Requires 0 <= k <= N.
GaussianInteger peel_coefficient(int n, int k);

/// Branch `branch` of the Lambert W function by Halley iteration from an
/// asymptotic logarithmic guess (series near the branch point for branch 0).
/// Throws NoConvergence.
Complex lambert_w(const Complex& z, int branch, const PrecisionPolicy& policy);

/// The onion-peel families: Odd locates zeros of h_{2N-1} through
/// c_{2N,k}; Even locates zeros of h_{2N} through c_{2N+1,k}.
enum class PeelFamily { Odd, Even };

/// (-c_{n,k+1}/c_{n,k})^{1/p}, principal branch, from the exact
/// coefficients (n = 2N, p = 4k+2 for Odd; n = 2N+1, p = 4k+4 for Even).
Complex peel_ratio_raw(PeelFamily family, int N, int k);
/// Closed form of the same root: e^{i pi/(4k+2)}/2 [(N+k)!/(N-k-1)!]^{1/(2k+1)}
/// for Odd and 1/2 [(N+k+1)!/(N-k-1)!]^{1/(2k+2)} for Even.
Complex peel_ratio_simplified(PeelFamily family, int N, int k);

struct PeelPrediction {
  PeelFamily family = PeelFamily::Odd;
  int N = 1;
  int k = 0;
  int ell = 0;
  int branch = 0;
  Complex omega_pred;
  int hankel_index = 1;  ///< 2N-1 for Odd, 2N for Even
};

/// Lambert-W predictions for one (family, N, k, ell) over branches
/// -max_branch..max_branch, keeping those in the open first quadrant.
std::vector<PeelPrediction> peel_prediction(PeelFamily family, int N, int k, int ell,
                                            const PrecisionPolicy& policy, int max_branch = 4);

/// Number of phase indices: 4k+2 for Odd, 4k+4 for Even.
int peel_phase_count(PeelFamily family, int k);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a);

/// det A^{[s]} with A_{ij} = binom(i+j, j), i, j < s.
BigInt pascal_det_check(int s);
/// det C^{[N,s]}: rows i < N-s are binom(i+j, i), rows i >= N-s are
/// binom(i+j+1, i+1), j < N.
BigInt c_matrix_det_check(int N, int s);

}  // namespace kp
