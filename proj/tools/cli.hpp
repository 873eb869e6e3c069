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

#include <iosfwd>
#include <string>
#include <vector>

namespace kp::cli {

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
/// Returns 0 on success, 2 when a verification suite fails and 1 on usage
/// or compute errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kp::cli
