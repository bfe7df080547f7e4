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
 * Shot sampling, frequency-based Z estimation, and Bloch coordinates.
 */
#pragma once

#include "qcrack/StateVector.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

namespace qcrack::sim {

/// Bitstrings are printed with qubit Q-1 leftmost and qubit 0 rightmost.
struct ShotCounts {
    std::uint64_t shots{0};
    std::map<std::string, std::uint64_t> counts;

    /// Builds counts whose `shots` is the sum of the given frequencies.
    static ShotCounts from_map(std::map<std::string, std::uint64_t> counts);
};

struct BlochCoords {
    double theta{0.0}; ///< [0, pi]
    double phi{0.0};   ///< [0, 2pi)
};

[[nodiscard]] std::string basis_label(std::size_t index, std::size_t num_qubits);

/// Draws `shots` basis states from |amp_i|^2 with an Rng seeded by `seed`.
[[nodiscard]] ShotCounts sample(const StateVector &state, std::uint64_t shots,
                                std::uint64_t seed);

/// (n0 - n1) / shots for `qubit`. Throws DataError on malformed bitstrings or
/// counts that do not sum to `shots`.
[[nodiscard]] double estimate_z_from_counts(const ShotCounts &counts,
                                            std::size_t qubit);

/// Single-qubit states only; the global phase is removed first so that the
/// |0⟩ amplitude is real and nonnegative. phi is 0 at either pole.
[[nodiscard]] BlochCoords bloch_coords(const StateVector &state);

} // namespace qcrack::sim
