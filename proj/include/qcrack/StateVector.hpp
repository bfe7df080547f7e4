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
 * Dense complex-amplitude register and the in-place gate kernels.
 */
#pragma once

#include "qcrack/Gate.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"

namespace qcrack::sim {

inline constexpr std::size_t kDefaultMaxQubits = 20;

/// Stride kernels. `amps` must have a power-of-two length covering every
/// index touched by the gate; no validation happens here.
namespace kernels {

/// Applies `m` to `target`, restricted to indices whose `control` bit is set
/// when a control is given. The matrix need not be unitary.
void apply_matrix(std::span<Complex> amps, std::size_t target,
                  const std::size_t *control, const Matrix2 &m);

void apply_gate(std::span<Complex> amps, const Gate &gate);

} // namespace kernels

class StateVector {
  public:
    /// |0...0⟩ on `num_qubits` qubits. Throws CapacityError outside
    /// [1, max_qubits].
    static StateVector zero(std::size_t num_qubits,
                            std::size_t max_qubits = kDefaultMaxQubits);

    /// Wraps explicit amplitudes. Length must be a power of two >= 2 and the
    /// norm must be 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }

    /// In-place gate application. Throws ArgumentError on bad indices.
    void apply(const Gate &gate);

    [[nodiscard]] double norm_squared() const noexcept;
    [[nodiscard]] std::vector<double> probabilities() const;

  private:
    StateVector(std::size_t num_qubits, std::vector<Complex> amps)
        : num_qubits_{num_qubits}, amps_{std::move(amps)} {}

    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

/// Throws ArgumentError unless all gate indices are distinct and < num_qubits.
void check_gate(const Gate &gate, std::size_t num_qubits);

[[nodiscard]] StateVector zero_state(std::size_t num_qubits);
[[nodiscard]] StateVector apply_gate(StateVector state, const Gate &gate);

/// ⟨Z⟩ on one qubit: P(bit = 0) - P(bit = 1).
[[nodiscard]] double z_expectation(const StateVector &state, std::size_t qubit);

/// `{"num_qubits": Q, "amps": [[re, im], ...]}` in basis-index order.
[[nodiscard]] nlohmann::json to_json(const StateVector &state);

} // namespace qcrack::sim
