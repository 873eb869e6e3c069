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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kissing/numerics.hpp"

namespace kp {

/// Outcome of one acceptance check.
struct SuiteResult {
  int id = 0;            ///< criterion number, 1..10
  std::string suite;     ///< suite it belongs to
  std::string name;
  bool pass = false;
  std::string detail;    ///< measured quantities, or the error
  double seconds = 0;
};

struct VerifyOptions {
  PrecisionPolicy policy;
  /// Replaces the principal tolerance of suites that have one
  /// (closedforms, toda, heine, kissing, peel).
  std::optional<double> tol;
  int threads = 1;
};

/// closedforms, toda, heine, leading, laguerre, kissing, peel, scanprops,
/// combinatorial.
const std::vector<std::string>& suite_names();

/// Runs a named suite, or every suite for "all". Throws InvalidArgument for
/// an unknown name.
std::vector<SuiteResult> run_suite(std::string_view suite, const VerifyOptions& options);

/// Runs criterion `id` (1..10).
SuiteResult run_criterion(int id, const VerifyOptions& options);

}  // namespace kp
