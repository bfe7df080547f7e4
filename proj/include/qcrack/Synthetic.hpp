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
 * Seeded generator for concrete-like texture patches with and without thin
 * cracks.
 *
 * Clean patches: mid-gray base, three octaves of bilinear value noise plus
 * per-pixel jitter, and up to three dark circular pores. Crack patches add a
 * 4-connected random-walk line, 1 or 2 pixels wide, running at least 112
 * pixels along its main axis.
 */
#pragma once

#include "qcrack/Dataset.hpp"

#include <cstdint>
#include <vector>

namespace qcrack::data {

struct SyntheticPatch {
    Patch patch;
    std::vector<std::uint8_t> crack_mask; ///< 1 where the crack darkened a pixel
};

/// One patch from its own seed. The texture depends only on `patch_seed`, so
/// the crack and clean renderings of one seed share the same background.
[[nodiscard]] SyntheticPatch render_synthetic(std::uint64_t patch_seed, Label label,
                                              std::string id);

/// `n_crack` crack patches followed by `n_clean` clean ones. Patch i uses
/// stream i of `seed`; ids are "syn_<i>_<label>".
[[nodiscard]] std::vector<Patch> generate_synthetic(std::size_t n_crack,
                                                    std::size_t n_clean,
                                                    std::uint64_t seed);

} // namespace qcrack::data
