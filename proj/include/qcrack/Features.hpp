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
 * Fixed classical descriptor for patches and CSV feature import.
 *
 * Built-in layout (512 values): the patch is cut into an 8x8 grid of 28x28
 * cells, visited row-major. Each cell contributes 8 values:
 *
 *   0  minimum intensity / 255
 *   1  mean intensity / 255
 *   2  maximum intensity / 255
 *   3  fraction of pixels with gradient magnitude in (6, 18]
 *   4  fraction of pixels with gradient magnitude above 18
 *   5  orientation bin [0, 60) degrees   \
 *   6  orientation bin [60, 120) degrees  > magnitude-weighted, / (pixels * 32)
 *   7  orientation bin [120, 180) degrees/
 *
 * Gradients are central differences with clamped borders, in gray levels per
 * pixel; orientation is unsigned.
 */
#pragma once

#include "qcrack/Dataset.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace qcrack::data {

inline constexpr std::size_t kGridCells = 8;
inline constexpr std::size_t kValuesPerCell = 8;
inline constexpr std::size_t kBuiltinFeatureDim = kGridCells * kGridCells * kValuesPerCell;

enum class FeatureSource { Builtin, Imported };

struct FeatureVector {
    std::vector<double> values;
    FeatureSource source{FeatureSource::Builtin};
};

/// Pure function of the pixel bytes.
[[nodiscard]] FeatureVector extract_features(const Patch &patch);

/// extract_features over many patches, possibly on several threads.
[[nodiscard]] std::vector<FeatureVector> extract_all(const std::vector<Patch> &patches);

struct ImportedFeatures {
    std::vector<std::string> ids;
    std::vector<FeatureVector> features;
    std::vector<Label> labels;

    [[nodiscard]] std::size_t dim() const noexcept {
        return features.empty() ? 0 : features.front().values.size();
    }
};

/// Rows `id,label,f_0,...,f_{F-1}` with F constant across the file. An
/// optional header row starting with "id," is skipped. Throws FormatError with
/// the line number on ragged or non-numeric rows, IoError if unreadable.
[[nodiscard]] ImportedFeatures import_features(const std::filesystem::path &path);

/// Inverse of import_features (with a header row).
[[nodiscard]] std::string features_csv(const ImportedFeatures &features);

} // namespace qcrack::data
