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

#include <string>
#include <vector>

#include "kissing/orthopoly.hpp"

namespace kp {

struct RootSet {
  std::vector<Complex> roots;
  Real residual;  ///< backward-relative residual max |p(z)| / sum |c_k| |z|^k
  int iterations = 0;
};

/// All roots by Aberth-Ehrlich at policy.bits. The leading coefficient
/// must exceed 1e-15 of the coefficient max-norm. Throws NoConvergence.
RootSet poly_roots(const std::vector<Complex>& coeffs, const PrecisionPolicy& policy);
RootSet poly_roots(const MonicPolynomial& p, const PrecisionPolicy& policy);

struct TrajectorySample {
  Real omega;
  std::vector<Complex> roots;  ///< matched to the previous existing sample
  bool exists = true;          ///< false where p_n does not exist
};

/// Roots of p_n on steps + 1 equispaced omegas in [a, b], matched greedily
/// to the previous sample. An interval is halved (up to 20 times) while
/// some root moves by more than 0.1.
std::vector<TrajectorySample> trajectory(int n, const Real& omega_start, const Real& omega_end,
                                         int steps, const PrecisionPolicy& policy,
                                         int threads = 1);

/// Greedy nearest-neighbour assignment: result[i] is the element of `next`
/// matched to previous[i]. Sizes must agree.
std::vector<Complex> match_roots(const std::vector<Complex>& previous,
                                 const std::vector<Complex>& next);

enum class ZeroKind { RealLine, ComplexPlane };

struct HankelZero {
  int n = 0;
  Complex omega;
  ZeroKind kind = ZeroKind::RealLine;
  Real residual;  ///< |h_n(omega)| / envelope
  bool suspected_double = false;
};

inline constexpr double kDipThreshold = 1e-12;

/// Sign changes of h_n on a grid, refined by bisection and Newton to 1e-25.
/// Grid minima of |h_n| / envelope below kDipThreshold without a sign change
/// are reported with suspected_double set.
std::vector<HankelZero> real_zero_scan(int n, const Real& omega_lo, const Real& omega_hi,
                                       int grid_points, const PrecisionPolicy& policy,
                                       int threads = 1);

/// Refines a real zero of h_n bracketed by [lo, hi].
Real refine_real_zero(int n, Real lo, Real hi, const PrecisionPolicy& policy);

/// Halley iteration on omega -> h_n(omega) from a complex guess, steps capped
/// at unit length, until |step| <= 1e-20.
/// Throws NoConvergence.
HankelZero complex_zero_refine(int n, const Complex& omega_guess, const PrecisionPolicy& policy);

/// Zeros of h_n in the box (0, re_max] x (0, im_max]: local minima of
/// |h_n| / envelope on a grid x grid lattice, each refined by
/// complex_zero_refine. Seeds that fail or leave the box are dropped,
/// duplicates within 1e-10 merged; sorted by |omega|.
std::vector<HankelZero> complex_zero_search(int n, const Real& re_max, const Real& im_max,
                                            int grid, const PrecisionPolicy& policy,
                                            int threads = 1);

struct KissingEvent {
  Real omega;            ///< zero of h_{2N}
  Complex factor;        ///< i h_{2N}' / h_{2N-1}
  Real residual;         ///< ||pt_{2N+1} - factor pt_{2N}|| / ||pt_{2N}||
  Real root_distance;    ///< roots of p_{2N} vs the degree-2N part of pt_{2N+1}
};

/// ||pt_{2N+1} - i (h_{2N}'/h_{2N-1}) pt_{2N}|| / ||pt_{2N}|| at any omega.
Real kissing_residual(int N, const Real& omega, const PrecisionPolicy& policy,
                      Complex* factor = nullptr);

std::vector<KissingEvent> kissing_detect(int N, const Real& omega_lo, const Real& omega_hi,
                                         const PrecisionPolicy& policy, int threads = 1);

struct InterlacingReport {
  std::vector<std::vector<Real>> even_zeros;  ///< zeros of h_0, h_2, ..., h_{2 N_max}
  std::vector<std::vector<Real>> odd_zeros;   ///< zeros of h_1, h_3, ..., h_{2 N_max - 1}
  std::vector<Real> adjacent_min;  ///< min over grid of max(|h_n|/env, |h_{n+1}|/env)
  std::vector<Real> skip_min;      ///< same for (h_n, h_{n+2})
  std::vector<std::string> findings;
  bool interlacing_holds = true;   ///< conjecture: zeros of h_{2n}, h_{2n+2} interlace
  bool odd_zero_free = true;       ///< conjecture: h_{2n+1} has no positive zeros
  bool propositions_hold = true;   ///< no common zeros of (h_n, h_{n+1}), (h_n, h_{n+2})
};

/// Scans h_0..h_{2 N_max + 1} on the grid. Conjecture violations are
/// collected as findings; propositions_hold is false only when a pair
/// of determinants comes within 1e-6 of a common zero.
InterlacingReport interlacing_check(int N_max, const Real& omega_lo, const Real& omega_hi,
                                    int grid_points, const PrecisionPolicy& policy,
                                    int threads = 1);

/// True when the two sorted sequences strictly alternate on their overlap.
bool strictly_interlace(const std::vector<Real>& a, const std::vector<Real>& b);

}  // namespace kp
