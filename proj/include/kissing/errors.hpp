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

#include <stdexcept>
#include <string>

namespace kp {

/// Base of every error raised by the library. `name()` is the stable
/// identifier reported by the command line front end.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define KP_DEFINE_ERROR(Type)                                          \
  class Type : public Error {                                          \
   public:                                                             \
    explicit Type(const std::string& what) : Error(#Type, what) {}     \
  }

KP_DEFINE_ERROR(PrecisionExhausted);
KP_DEFINE_ERROR(CrossCheckFailed);
KP_DEFINE_ERROR(IndexOutOfRange);
KP_DEFINE_ERROR(RealityCheckFailed);
KP_DEFINE_ERROR(SingularChain);
KP_DEFINE_ERROR(NoConvergence);
KP_DEFINE_ERROR(CostCapExceeded);
KP_DEFINE_ERROR(InvalidArgument);

#undef KP_DEFINE_ERROR

/// p_n does not exist at the requested omega: h_{n-1} is below the
/// degeneracy threshold.
class NearSingular : public Error {
 public:
  NearSingular(int index, const std::string& what)
      : Error("NearSingular", what), index_(index) {}
  /// Index of the vanishing Hankel determinant.
  int index() const noexcept { return index_; }

 private:
  int index_;
};

}  // namespace kp
