// Copyright 2026 The dbsyn Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dbsyn {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,    // law violation, type error, not equal
  kExitInvalid = 2,   // parse, validation or usage error
  kExitUnknown = 3,   // fuel exhausted or equivalence unknown
};

/// Runs the driver on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dbsyn
