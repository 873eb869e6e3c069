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

#include "kissing/oracle.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "kissing/hankel.hpp"
#include "kissing/orthopoly.hpp"

namespace kp {

namespace {

// P_m(x) and P_m'(x) by the three-term recurrence.
std::pair<Real, Real> legendre_with_derivative(int m, const Real& x) {
  Real prev(1);
  Real cur = x;
  for (int k = 1; k < m; ++k) {
    Real next = ((2 * k + 1) * x * cur - k * prev) / (k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  Real d = m * (x * cur - prev) / (x * x - 1);
  return {std::move(cur), std::move(d)};
}

struct HeineSums {
  Complex plain;                 // the Hankel integral
  std::optional<Complex> poly;   // with the extra prod (x - x_m) factor
};

// Sum over the tensor grid. The outermost index is distributed over threads;
// partial sums are kept per outer index and added in index order.
HeineSums heine_sums(int n, const Complex& omega, const std::optional<Complex>& x, int order,
                     const PrecisionPolicy& policy, int threads, long long budget) {
  if (n < 1) throw IndexOutOfRange("Heine integral needs n >= 1");
  policy.validate();
  if (order <= 0) order = default_heine_order(n, omega);
  long double cost = 1;
  for (int i = 0; i < n; ++i) cost *= order;
  if (cost > static_cast<long double>(budget)) {
    throw CostCapExceeded(std::to_string(order) + "^" + std::to_string(n) +
                          " quadrature nodes exceed the budget of " + std::to_string(budget));
  }

  WorkingPrecision wp(policy.bits);
  const QuadratureRule rule = gauss_legendre(order);
  const Complex i_omega = times_i(omega);
  std::vector<Complex> phase;
  std::vector<Complex> linear;
  for (const auto& node : rule.nodes) {
    phase.push_back(exp(i_omega * Complex(node)));
    if (x) linear.push_back(*x - Complex(node));
  }

  std::vector<Complex> outer_plain(static_cast<size_t>(order));
  std::vector<Complex> outer_poly(static_cast<size_t>(order));
  parallel_for(order, threads, [&](int first) {
    std::vector<int> idx(static_cast<size_t>(n), 0);
    idx[0] = first;
    // Partial products along the current index path: real weight times
    // squared Vandermonde, and the complex phase (times the linear factor).
    std::vector<Real> real_part(static_cast<size_t>(n));
    std::vector<Complex> phase_part(static_cast<size_t>(n));
    std::vector<Complex> poly_part(static_cast<size_t>(n));
    Complex acc_plain(Real(0));
    Complex acc_poly(Real(0));

    auto extend = [&](int depth) {
      const size_t d = static_cast<size_t>(depth);
      const size_t node = static_cast<size_t>(idx[d]);
      Real r = rule.weights[node];
      for (size_t prev = 0; prev < d; ++prev) {
        const Real diff = rule.nodes[node] - rule.nodes[static_cast<size_t>(idx[prev])];
        r *= diff * diff;
      }
      if (depth == 0) {
        real_part[d] = std::move(r);
        phase_part[d] = phase[node];
        if (x) poly_part[d] = linear[node];
      } else {
        real_part[d] = real_part[d - 1] * r;
        phase_part[d] = phase_part[d - 1] * phase[node];
        if (x) poly_part[d] = poly_part[d - 1] * linear[node];
      }
    };

    extend(0);
    int depth = 1;
    if (n == 1) {
      acc_plain += phase_part[0] * real_part[0];
      if (x) acc_poly += phase_part[0] * poly_part[0] * real_part[0];
    } else {
      idx[1] = 0;
      while (depth > 0) {
        const size_t d = static_cast<size_t>(depth);
        if (idx[d] == order) {
          --depth;
          if (depth > 0) ++idx[static_cast<size_t>(depth)];
          continue;
        }
        extend(depth);
        if (depth == n - 1) {
          const Complex term = phase_part[d] * real_part[d];
          acc_plain += term;
          if (x) acc_poly += term * poly_part[d];
          ++idx[d];
        } else {
          ++depth;
          idx[static_cast<size_t>(depth)] = 0;
        }
      }
    }
    outer_plain[static_cast<size_t>(first)] = std::move(acc_plain);
    outer_poly[static_cast<size_t>(first)] = std::move(acc_poly);
  });

  Real nfact(1);
  for (int k = 2; k <= n; ++k) nfact *= k;
  HeineSums out{Complex(Real(0)), std::nullopt};
  for (const auto& s : outer_plain) out.plain += s;
  out.plain /= nfact;
  if (x) {
    Complex poly(Real(0));
    for (const auto& s : outer_poly) poly += s;
    out.poly = poly / nfact;
  }
  return out;
}

}  // namespace

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw InvalidArgument("quadrature order must be >= 1");
  const long bits = working_bits();
  const Real tol = ldexp(Real(1), -(bits - 8));
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(static_cast<size_t>(order));
  rule.weights.resize(static_cast<size_t>(order));
  // Nodes come in +-pairs; solve for the positive half and mirror.
  for (int i = 0; i < (order + 1) / 2; ++i) {
    Real x = cos(pi() * (i + Real("0.75")) / (order + Real("0.5")));
    Real derivative;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre_with_derivative(order, x);
      const Real step = p / dp;
      x -= step;
      if (abs(step) <= tol) {
        derivative = legendre_with_derivative(order, x).second;
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NoConvergence("Legendre node " + std::to_string(i) + " of order " +
                          std::to_string(order) + " did not converge");
    }
    if (2 * i + 1 == order) x = Real(0);
    const Real w = 2 / ((1 - x * x) * derivative * derivative);
    const size_t hi = static_cast<size_t>(order - 1 - i);
    const size_t lo = static_cast<size_t>(i);
    rule.nodes[hi] = x;
    rule.weights[hi] = w;
    rule.nodes[lo] = -x;
    rule.weights[lo] = w;
  }
  return rule;
}

int default_heine_order(int n, const Complex& omega) {
  const double w = abs(omega).to_double();
  return std::max(30, static_cast<int>(std::ceil(3 * w)) + n * n);
}

Complex heine_hankel(int n, const Complex& omega, int order, const PrecisionPolicy& policy,
                     int threads, long long budget) {
  return heine_sums(n, omega, std::nullopt, order, policy, threads, budget).plain;
}

Complex heine_poly(int n, const Complex& omega, const Complex& x, int order,
                   const PrecisionPolicy& policy, int threads, long long budget) {
  const HeineSums s = heine_sums(n, omega, x, order, policy, threads, budget);
  WorkingPrecision wp(policy.bits);
  if (abs(s.plain) <= Real(kDegeneracyThreshold) * envelope(n - 1, omega)) {
    throw NearSingular(n - 1, "h_" + std::to_string(n - 1) + " vanishes at this omega");
  }
  return *s.poly / s.plain;
}

}  // namespace kp
