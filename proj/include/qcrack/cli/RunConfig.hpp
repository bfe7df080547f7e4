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
 * Experiment configuration for `train` and `eval`: one JSON document whose
 * schema is published in schemas/run_config.schema.json.
 */
#pragma once

#include "qcrack/Circuit.hpp"
#include "qcrack/Gradient.hpp"
#include "qcrack/HybridModel.hpp"
#include "qcrack/Split.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qcrack::cli {

/// Where samples come from.
struct DataSource {
    enum class Kind { Synthetic, Directory, Features };
    Kind kind{Kind::Synthetic};
    std::size_t n_crack{723};
    std::size_t n_clean{500};
    std::filesystem::path dir;
    std::filesystem::path manifest; ///< defaults to dir/manifest.csv
    std::filesystem::path features;
    std::optional<std::uint64_t> seed; ///< synthetic generation; run seed if unset
};

struct RunConfig {
    circuit::CircuitSpec circuit{};
    autodiff::GradMethod method{autodiff::Backprop{}};
    std::size_t epochs{10};
    std::uint64_t seed{0};
    std::uint64_t shots{0}; ///< 0 = exact expectations
    std::size_t batch_size{1};
    data::SplitConfig split{}; ///< split.seed is ignored; see split_seed
    std::optional<std::uint64_t> split_seed; ///< run seed if unset
    DataSource data{};
    std::filesystem::path out{"run"};
    bool timing{true};

    [[nodiscard]] data::SplitConfig resolved_split() const;
    [[nodiscard]] std::uint64_t data_seed() const;
};

/// Validates and parses a config document. Missing keys take the defaults
/// above; unknown keys and type errors throw FormatError naming the key.
[[nodiscard]] RunConfig parse_run_config(const nlohmann::json &j);

/// Fully explicit document; parse_run_config(to_json(c)) reproduces `c`.
[[nodiscard]] nlohmann::json to_json(const RunConfig &config);

/// Samples with features extracted (or imported), plus the split.
struct PreparedData {
    std::vector<model::Example> examples;
    data::SplitIndices split;
    std::size_t feature_dim{0};

    [[nodiscard]] std::vector<model::Example> subset(const std::vector<std::size_t> &idx) const;
    [[nodiscard]] std::vector<std::string> ids() const;
};

[[nodiscard]] PreparedData prepare_data(const RunConfig &config);

} // namespace qcrack::cli
