// Copyright 2026 The gqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gqt::cli {

inline constexpr std::uint64_t kDefaultSeed = 2014;

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kValidityFailure = 2,
  kCapExceeded = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or to --out/--dump files), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gqt::cli
