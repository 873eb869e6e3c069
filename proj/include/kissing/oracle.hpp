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

#include "kissing/numerics.hpp"

namespace kp {

struct QuadratureRule {
  std::vector<Real> nodes;    ///< ascending, in (-1, 1)
  std::vector<Real> weights;  ///< positive, summing to 2
  int order = 0;
};

/// Gauss-Legendre rule at the working precision: nodes by Newton on P_order
/// from Chebyshev guesses, weights 2 / ((1 - x^2) P'(x)^2).
/// Throws InvalidArgument for order < 1 and NoConvergence.
QuadratureRule gauss_legendre(int order);

inline constexpr long long kDefaultNodeBudget = 10'000'000;

/// max(30, ceil(3 |omega|) + n^2).
int default_heine_order(int n, const Complex& omega);

/// h_{n-1} as the n-fold integral
///   (1/n!) int prod_{k<l} (x_l - x_k)^2 e^{i omega sum x} dx
/// over [-1, 1]^n by tensor Gauss-Legendre with `order` points per axis
/// (order <= 0 picks default_heine_order). Throws CostCapExceeded when
/// order^n exceeds `budget`.
Complex heine_hankel(int n, const Complex& omega, int order, const PrecisionPolicy& policy,
                     int threads = 1, long long budget = kDefaultNodeBudget);

/// p_n(x) as (1/(n! h_{n-1})) int prod_m (x - x_m) prod_{k<l} (x_l - x_k)^2
/// e^{i omega sum x} dx, with h_{n-1} from the same rule.
/// Throws CostCapExceeded and NearSingular.
Complex heine_poly(int n, const Complex& omega, const Complex& x, int order,
                   const PrecisionPolicy& policy, int threads = 1,
                   long long budget = kDefaultNodeBudget);

}  // namespace kp
