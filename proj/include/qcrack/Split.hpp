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
 * Stratified train/validation/test splitting.
 *
 * Each class is shuffled on its own seeded stream, its size is apportioned to
 * the three splits by largest remainder (ties go to the earlier split), and
 * contiguous runs of the shuffled order are assigned train, val, test.
 * For 723 crack / 500 clean samples this yields 506/109/108 + 350/75/75 at
 * 70/15/15 and 29/29/665 + 20/20/460 at 4/4/92.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace qcrack::data {

struct SplitConfig {
    double train{0.7};
    double val{0.15};
    double test{0.15};
    std::uint64_t seed{0};

    /// Ratios must be finite, nonnegative, and sum to 1 within 1e-9.
    void validate() const;
};

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> val;
    std::vector<std::size_t> test;
    std::vector<std::string> warnings;
};

/// Largest-remainder apportionment of `n` items over the three ratios.
[[nodiscard]] std::array<std::size_t, 3> apportion(std::size_t n, const SplitConfig &config);

/// Partitions indices 0..labels.size()-1. A split that gets no samples of
/// some class despite a positive ratio produces a warning (also sent to the
/// warning sink), not an error.
[[nodiscard]] SplitIndices split(std::span<const int> labels, const SplitConfig &config);

/// Audit record: seed, ratios, and the ids in each split.
[[nodiscard]] nlohmann::json split_record(std::span<const std::string> ids,
                                          const SplitIndices &indices,
                                          const SplitConfig &config);

} // namespace qcrack::data
