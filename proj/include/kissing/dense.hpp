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

// Eigen integration for the multiprecision scalar and the dense LU kernel.
// The kernel is templated on the scalar so the same code runs on
// std::complex<double> in tests and on kp::Complex in production.

#include <Eigen/Core>

#include <complex>
#include <cstdlib>
#include <vector>

#include "kissing/complex.hpp"

namespace Eigen {

template <>
struct NumTraits<kp::Complex> : GenericNumTraits<kp::Complex> {
  using Real = kp::Complex;
  using NonInteger = kp::Complex;
  using Nested = kp::Complex;
  using Literal = kp::Complex;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline int digits10() { return kp::decimal_digits_for_bits(kp::working_bits()); }
};

}  // namespace Eigen

namespace kp {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = MatrixX<Complex>;
using ComplexVector = VectorX<Complex>;

inline double abs1(const std::complex<double>& z) { return std::abs(z.real()) + std::abs(z.imag()); }

/// In-place LU factorisation with partial pivoting, PA = LU, L unit lower
/// triangular and stored below the diagonal.
template <typename Scalar>
class PartialPivLU {
 public:
  explicit PartialPivLU(MatrixX<Scalar> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const Eigen::Index n = lu_.rows();
    for (Eigen::Index i = 0; i < n; ++i) perm_[static_cast<size_t>(i)] = i;
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index p = k;
      auto best = abs1(lu_(k, k));
      for (Eigen::Index i = k + 1; i < n; ++i) {
        auto m = abs1(lu_(i, k));
        if (best < m) {
          best = m;
          p = i;
        }
      }
      if (p != k) {
        lu_.row(p).swap(lu_.row(k));
        std::swap(perm_[static_cast<size_t>(p)], perm_[static_cast<size_t>(k)]);
        sign_ = -sign_;
      }
      if (is_zero(lu_(k, k))) {
        singular_ = true;
        continue;
      }
      const Scalar inv_pivot = Scalar(one()) / lu_(k, k);
      for (Eigen::Index i = k + 1; i < n; ++i) {
        lu_(i, k) = lu_(i, k) * inv_pivot;
        const Scalar l = lu_(i, k);
        for (Eigen::Index j = k + 1; j < n; ++j) lu_(i, j) -= l * lu_(k, j);
      }
    }
  }

  Scalar determinant() const {
    Scalar det = sign_ > 0 ? Scalar(one()) : Scalar(-one());
    for (Eigen::Index k = 0; k < lu_.rows(); ++k) det *= lu_(k, k);
    return det;
  }

  /// Solves A x = b. The caller guarantees A is nonsingular.
  VectorX<Scalar> solve(const VectorX<Scalar>& b) const {
    const Eigen::Index n = lu_.rows();
    VectorX<Scalar> x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = b(perm_[static_cast<size_t>(i)]);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) x(i) -= lu_(i, j) * x(j);
    }
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      for (Eigen::Index j = i + 1; j < n; ++j) x(i) -= lu_(i, j) * x(j);
      x(i) = x(i) / lu_(i, i);
    }
    return x;
  }

  bool exactly_singular() const noexcept { return singular_; }
  const MatrixX<Scalar>& factors() const noexcept { return lu_; }
  int permutation_sign() const noexcept { return sign_; }

 private:
  static auto one() {
    if constexpr (std::is_same_v<Scalar, Complex>) {
      return Real(1);
    } else {
      return typename Scalar::value_type(1);
    }
  }
  static bool is_zero(const Scalar& z) {
    if constexpr (std::is_same_v<Scalar, Complex>) {
      return z.is_zero();
    } else {
      return z == Scalar(0);
    }
  }

  MatrixX<Scalar> lu_;
  std::vector<Eigen::Index> perm_;
  int sign_ = 1;
  bool singular_ = false;
};

template <typename Scalar>
Scalar determinant(const MatrixX<Scalar>& a) {
  return PartialPivLU<Scalar>(a).determinant();
}

}  // namespace kp
