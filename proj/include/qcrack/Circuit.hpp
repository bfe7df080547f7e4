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
 * The variational classifier circuit: Hadamard layer, Ry feature encoding,
 * `q_depth` blocks of brick-pattern CX entanglement followed by trainable Ry
 * rotations, then a Pauli-Z readout on every wire.
 */
#pragma once

#include "qcrack/Gate.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qcrack::circuit {

enum class Entanglement { ParallelBrick };
enum class InputScaling { TanhHalfPi };

struct CircuitSpec {
    std::size_t num_qubits{4};
    std::size_t q_depth{1};
    Entanglement entanglement{Entanglement::ParallelBrick};
    InputScaling input_scaling{InputScaling::TanhHalfPi};

    /// Encoding layer plus the variational blocks.
    [[nodiscard]] std::size_t layer_count() const noexcept { return q_depth + 1; }
    /// Trainable rotation angles, laid out [block][qubit].
    [[nodiscard]] std::size_t param_count() const noexcept {
        return q_depth * num_qubits;
    }
    /// Angles a shift-based gradient has to visit: encoding plus trainable.
    [[nodiscard]] std::size_t shiftable_count() const noexcept {
        return layer_count() * num_qubits;
    }

    /// Throws ArgumentError/CapacityError on out-of-range fields.
    void validate() const;

    bool operator==(const CircuitSpec &) const = default;
};

[[nodiscard]] nlohmann::json to_json(const CircuitSpec &spec);
/// Throws FormatError on unknown keys, wrong types, or unknown tags.
[[nodiscard]] CircuitSpec spec_from_json(const nlohmann::json &j);

/// Raw features (pre-scaling) plus trainable angles.
struct QNodeInput {
    std::vector<double> features;
    std::vector<double> params;
};

/// Encoding angles (already scaled) plus trainable angles. Gradients with
/// respect to "inputs" are taken with respect to these encoding angles.
struct EncodedInput {
    std::vector<double> angles;
    std::vector<double> params;
};

struct QNodeOutput {
    std::vector<double> z; ///< <Z> per wire, each in [-1, 1]
};

struct Exact {};
struct Shots {
    std::uint64_t shots{1000};
    std::uint64_t seed{0};
};
using EvalMode = std::variant<Exact, Shots>;

/// A gate plus the index of the angle it reads, if any. Slots 0..Q-1 are the
/// encoding angles; slot Q + block*Q + qubit is a trainable angle.
struct CircuitOp {
    sim::Gate gate;
    std::optional<std::size_t> slot;
};
using Circuit = std::vector<CircuitOp>;

/// angle_i = (pi/2) * tanh(x_i). Throws DataError on NaN.
[[nodiscard]] std::vector<double> encode_features(std::span<const double> x);

/// d angle_i / d x_i for the scaling above.
[[nodiscard]] std::vector<double>
encode_features_derivative(std::span<const double> x);

[[nodiscard]] EncodedInput encode(const CircuitSpec &spec, const QNodeInput &input);

[[nodiscard]] Circuit build_circuit(const CircuitSpec &spec,
                                    const EncodedInput &input);
[[nodiscard]] Circuit build_circuit(const CircuitSpec &spec,
                                    const QNodeInput &input);

/// Number of gates `build_circuit` emits: 2Q + q_depth * (2Q - 1).
[[nodiscard]] std::size_t gate_count(const CircuitSpec &spec) noexcept;

/// One line per gate, for inspection.
[[nodiscard]] std::string describe(const CircuitSpec &spec, const Circuit &circuit);

/// Runs the circuit and reads <Z> per wire. Pure in (spec, input, mode).
[[nodiscard]] QNodeOutput evaluate(const CircuitSpec &spec,
                                   const EncodedInput &input,
                                   const EvalMode &mode = Exact{});
[[nodiscard]] QNodeOutput evaluate(const CircuitSpec &spec,
                                   const QNodeInput &input,
                                   const EvalMode &mode = Exact{});

/// Elementwise `evaluate`, possibly on several threads; order is preserved.
/// A failing element aborts the batch with its index in the message.
[[nodiscard]] std::vector<QNodeOutput>
evaluate_batch(const CircuitSpec &spec, std::span<const QNodeInput> inputs,
               const EvalMode &mode = Exact{});

/// Validates vector lengths against `spec`.
void check_input(const CircuitSpec &spec, const EncodedInput &input);

} // namespace qcrack::circuit
