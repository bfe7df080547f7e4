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
 * Grayscale patches, binary PGM (P5) I/O, and manifest-driven loading.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qcrack::data {

inline constexpr std::size_t kPatchSize = 224;
inline constexpr std::size_t kPatchPixels = kPatchSize * kPatchSize;

enum class Label : int { NoCrack = 0, Crack = 1 };

/// "crack" or "no_crack".
[[nodiscard]] std::string_view label_name(Label label) noexcept;
/// Accepts "crack", "no_crack", "1", "0". Throws DataError otherwise.
[[nodiscard]] Label parse_label(std::string_view text);

struct Patch {
    std::string id;
    Label label{Label::NoCrack};
    std::vector<std::uint8_t> pixels; ///< row-major, kPatchPixels bytes

    [[nodiscard]] std::uint8_t at(std::size_t row, std::size_t col) const {
        return pixels[row * kPatchSize + col];
    }
    /// Throws FormatError unless exactly kPatchPixels bytes are present.
    void validate() const;
};

/// Serialized P5 image with maxval 255.
[[nodiscard]] std::string encode_pgm(const Patch &patch);

/// Parses a 224x224 P5 image with maxval 255. `name` is used in messages.
/// Throws FormatError on any deviation.
[[nodiscard]] std::vector<std::uint8_t> decode_pgm(std::string_view bytes,
                                                   std::string_view name);

/// Loads every patch listed in a `filename,label` manifest; file names are
/// resolved against `dir`. An optional header row is skipped. Throws
/// FormatError (naming the file) on bad images or rows and IoError on missing
/// files. An empty manifest yields an empty list and a warning.
[[nodiscard]] std::vector<Patch> load_dataset(const std::filesystem::path &dir,
                                              const std::filesystem::path &manifest);

/// Writes `<id>.pgm` for every patch plus `manifest.csv`, each via a
/// temporary file and rename.
void write_dataset(const std::filesystem::path &dir, const std::vector<Patch> &patches);

/// Reads a whole file. Throws IoError.
[[nodiscard]] std::string read_file(const std::filesystem::path &path);
/// Writes to `<path>.tmp` then renames over `path`. Throws IoError.
void write_file_atomic(const std::filesystem::path &path, std::string_view contents);

} // namespace qcrack::data
