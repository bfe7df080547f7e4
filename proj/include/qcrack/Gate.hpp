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
 * Gate descriptions for the statevector simulator.
 *
 * Qubit ordering is little-endian: qubit 0 is the least-significant bit of a
 * basis index, and kets are printed with the highest qubit leftmost. A
 * two-qubit ket written |c t⟩ therefore has `c` on qubit 1 and `t` on
 * qubit 0, so |10⟩ is basis index 2.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>

namespace qcrack::sim {

using Complex = std::complex<double>;

enum class GateKind { X, H, Ry, CX, CRy };

struct Gate {
    GateKind kind{GateKind::X};
    std::size_t target{0};
    std::optional<std::size_t> control{};
    double angle{0.0}; ///< radians; only used by Ry and CRy

    static Gate x(std::size_t target) { return {GateKind::X, target, {}, 0.0}; }
    static Gate h(std::size_t target) { return {GateKind::H, target, {}, 0.0}; }
    static Gate ry(std::size_t target, double angle) {
        return {GateKind::Ry, target, {}, angle};
    }
    static Gate cx(std::size_t control, std::size_t target) {
        return {GateKind::CX, target, control, 0.0};
    }
    static Gate cry(std::size_t control, std::size_t target, double angle) {
        return {GateKind::CRy, target, control, angle};
    }

    [[nodiscard]] bool is_parametric() const noexcept {
        return kind == GateKind::Ry || kind == GateKind::CRy;
    }
    [[nodiscard]] bool is_controlled() const noexcept {
        return kind == GateKind::CX || kind == GateKind::CRy;
    }

    /// e.g. "Ry(0.300000) q2" or "CX q0->q1".
    [[nodiscard]] std::string to_string() const;
};

/// Row-major 2x2 matrix acting on the target (applied only where the control
/// is |1⟩ for controlled kinds).
using Matrix2 = std::array<Complex, 4>;

[[nodiscard]] Matrix2 target_matrix(const Gate &gate);

/// Derivative of the target matrix with respect to the gate angle.
/// Only defined for parametric kinds.
[[nodiscard]] Matrix2 target_matrix_derivative(const Gate &gate);

/// Inverse gate (X, H, CX are involutions; Ry(t)^-1 = Ry(-t)).
[[nodiscard]] Gate adjoint(const Gate &gate);

} // namespace qcrack::sim
