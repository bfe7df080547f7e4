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
 * Order-of-magnitude device runtime model:
 *
 *   device_seconds = n_calls * shots * layers / clops
 *   wall_seconds   = device_seconds * overhead_factor
 *
 * `overhead_factor` lumps queueing and transpilation into one multiplier.
 * This is not a calibrated predictor.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"

namespace qcrack::cli {

struct BackendProfile {
    std::string name;
    std::uint64_t clops{1};
    std::uint64_t qv{0};
    double overhead_factor{1.0};
};

/// Throws FormatError unless clops > 0 and overhead_factor >= 1.
[[nodiscard]] BackendProfile profile_from_json(const nlohmann::json &j);
[[nodiscard]] nlohmann::json to_json(const BackendProfile &profile);

/// Looks up `<dir>/<name>.json`, then `<dir>/ibmq_<name>.json`.
/// Throws IoError if neither exists.
[[nodiscard]] BackendProfile find_profile(const std::filesystem::path &dir,
                                          const std::string &name);

struct RuntimeEstimate {
    double device_seconds{0.0};
    double wall_seconds{0.0};
};

[[nodiscard]] RuntimeEstimate estimate_runtime(const BackendProfile &profile,
                                               std::uint64_t n_calls, std::uint64_t shots,
                                               std::uint64_t layers);

} // namespace qcrack::cli
