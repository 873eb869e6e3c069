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

// Dense polynomial kernels templated on the coefficient type. Coefficients
// are stored constant term first. Instantiated for std::complex<double> and
// kp::Complex.

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace kp {

template <typename Scalar>
Scalar horner(const std::vector<Scalar>& c, const Scalar& z) {
  Scalar acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// p(z) and p'(z) in one pass.
template <typename Scalar>
std::pair<Scalar, Scalar> horner_with_derivative(const std::vector<Scalar>& c, const Scalar& z) {
  Scalar value = c.back();
  Scalar deriv{};
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
  return {value, deriv};
}

template <typename Scalar>
auto magnitude(const Scalar& z) {
  using std::abs;
  return abs(z);
}

template <typename Scalar>
using MagnitudeOf = decltype(magnitude(std::declval<Scalar>()));

template <typename Scalar>
struct AberthResult {
  std::vector<Scalar> roots;
  MagnitudeOf<Scalar> residual;  ///< max |p(z)| / sum |c_k| |z|^k over the roots
  int iterations = 0;
  bool converged = false;
};

/// Backward-relative residual of a root set.
template <typename Scalar>
MagnitudeOf<Scalar> root_residual(const std::vector<Scalar>& c, const std::vector<Scalar>& roots) {
  using Mag = MagnitudeOf<Scalar>;
  Mag worst = Mag(0);
  for (const auto& z : roots) {
    const Mag az = magnitude(z);
    Mag scale = Mag(0);
    Mag power = Mag(1);
    for (const auto& ck : c) {
      scale = scale + magnitude(ck) * power;
      power = power * az;
    }
    const Mag r = magnitude(horner(c, z)) / scale;
    if (worst < r) worst = r;
  }
  return worst;
}

/// Aberth-Ehrlich simultaneous iteration. Starts on a rotated circle whose
/// radius is the Fujiwara bound; a root is frozen once its correction drops
/// below tol * max(1, |z|).
template <typename Scalar>
AberthResult<Scalar> aberth(const std::vector<Scalar>& c, const MagnitudeOf<Scalar>& tol,
                            int max_iterations) {
  using Mag = MagnitudeOf<Scalar>;
  using std::pow;
  const int n = static_cast<int>(c.size()) - 1;
  AberthResult<Scalar> out{{}, Mag(0), 0, true};
  if (n < 1) return out;

  const Mag lead = magnitude(c.back());
  Mag radius = Mag(0);
  for (int k = 1; k <= n; ++k) {
    Mag term = pow(magnitude(c[static_cast<size_t>(n - k)]) / lead, Mag(1.0 / k));
    if (k == n) term = pow(magnitude(c[0]) / (2 * lead), Mag(1.0 / k));
    if (radius < term) radius = term;
  }
  radius = 2 * radius;
  if (radius == Mag(0)) radius = Mag(1);

  std::vector<Scalar> z;
  z.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = 2 * std::numbers::pi * k / n + 0.4;
    const Mag r = radius * Mag(1.0 + 0.05 * ((k * 7) % 5));
    z.push_back(Scalar(r * Mag(std::cos(theta)), r * Mag(std::sin(theta))));
  }

  std::vector<bool> done(static_cast<size_t>(n), false);
  int remaining = n;
  int it = 0;
  for (; it < max_iterations && remaining > 0; ++it) {
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<size_t>(i)]) continue;
      auto& zi = z[static_cast<size_t>(i)];
      auto [p, dp] = horner_with_derivative(c, zi);
      if (magnitude(p) == Mag(0)) {
        done[static_cast<size_t>(i)] = true;
        --remaining;
        continue;
      }
      const Scalar ratio = p / dp;
      Scalar repulsion{};
      for (int j = 0; j < n; ++j) {
        if (j != i) repulsion = repulsion + Scalar(Mag(1), Mag(0)) / (zi - z[static_cast<size_t>(j)]);
      }
      const Scalar step = ratio / (Scalar(Mag(1), Mag(0)) - ratio * repulsion);
      zi = zi - step;
      Mag size = magnitude(zi);
      if (size < Mag(1)) size = Mag(1);
      if (!(tol * size < magnitude(step))) {
        done[static_cast<size_t>(i)] = true;
        --remaining;
      }
    }
  }
  out.converged = remaining == 0;
  out.iterations = it;
  out.roots = std::move(z);
  out.residual = root_residual(c, out.roots);
  return out;
}

}  // namespace kp
