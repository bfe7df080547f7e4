// Copyright 2026 The qcrack Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Entry point of the `qcrack` command-line tool.
 *
 * Subcommands: gen, train, eval, gradcheck, ledger, estimate.
 * Exit codes: 0 success, 1 runtime failure, 2 configuration or usage error.
 */
#pragma once

#include <iosfwd>

namespace qcrack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qcrack::cli
