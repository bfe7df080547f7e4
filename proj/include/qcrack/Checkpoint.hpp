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
 * JSON checkpoints: layer shapes and weights, circuit parameters and spec,
 * optimizer moments, seed, and the run configuration that produced them.
 */
#pragma once

#include "qcrack/Adam.hpp"
#include "qcrack/HybridModel.hpp"

#include <cstdint>
#include <optional>

#include "json.hpp"

namespace qcrack::model {

inline constexpr const char *kCheckpointFormat = "qcrack-checkpoint/v1";

struct Checkpoint {
    HybridModel model;
    AdamState optimizer;
    std::uint64_t seed{0};
    nlohmann::json config; ///< run configuration, or null
};

[[nodiscard]] nlohmann::json to_json(const LinearLayer &layer);
[[nodiscard]] nlohmann::json to_json(const HybridModel &model);
[[nodiscard]] nlohmann::json to_json(const Checkpoint &checkpoint);

/// Throws FormatError on missing fields or inconsistent shapes.
[[nodiscard]] HybridModel model_from_json(const nlohmann::json &j);
[[nodiscard]] Checkpoint checkpoint_from_json(const nlohmann::json &j);

} // namespace qcrack::model
