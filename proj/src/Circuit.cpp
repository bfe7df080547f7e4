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

#include "qcrack/Circuit.hpp"

#include "qcrack/Error.hpp"
#include "qcrack/Measurement.hpp"
#include "qcrack/Parallel.hpp"
#include "qcrack/StateVector.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>

namespace qcrack::circuit {

void CircuitSpec::validate() const {
    if (num_qubits < 1 || num_qubits > sim::kDefaultMaxQubits) {
        throw CapacityError("num_qubits " + std::to_string(num_qubits) +
                            " outside [1, " +
                            std::to_string(sim::kDefaultMaxQubits) + "]");
    }
    if (q_depth < 1) {
        throw ArgumentError("q_depth must be >= 1");
    }
}

nlohmann::json to_json(const CircuitSpec &spec) {
    return {{"num_qubits", spec.num_qubits},
            {"q_depth", spec.q_depth},
            {"entanglement", "parallel-brick"},
            {"input_scaling", "tanh-halfpi"}};
}

CircuitSpec spec_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw FormatError("circuit spec must be a JSON object");
    }
    CircuitSpec spec;
    for (const auto &[key, value] : j.items()) {
        if (key == "num_qubits" || key == "q_depth") {
            if (!value.is_number_unsigned() &&
                !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
                throw FormatError("circuit." + key + " must be a positive integer");
            }
            (key == "num_qubits" ? spec.num_qubits : spec.q_depth) =
                value.get<std::size_t>();
        } else if (key == "entanglement") {
            if (value != "parallel-brick") {
                throw FormatError("circuit.entanglement: only \"parallel-brick\" is supported");
            }
        } else if (key == "input_scaling") {
            if (value != "tanh-halfpi") {
                throw FormatError("circuit.input_scaling: only \"tanh-halfpi\" is supported");
            }
        } else {
            throw FormatError("circuit: unknown key '" + key + "'");
        }
    }
    try {
        spec.validate();
    } catch (const Error &e) {
        throw FormatError(std::string("circuit: ") + e.what());
    }
    return spec;
}

std::vector<double> encode_features(std::span<const double> x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::isnan(x[i])) {
            throw DataError("feature " + std::to_string(i) + " is NaN");
        }
        out[i] = std::numbers::pi / 2.0 * std::tanh(x[i]);
    }
    return out;
}

std::vector<double> encode_features_derivative(std::span<const double> x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = std::tanh(x[i]);
        out[i] = std::numbers::pi / 2.0 * (1.0 - t * t);
    }
    return out;
}

EncodedInput encode(const CircuitSpec &spec, const QNodeInput &input) {
    if (input.features.size() != spec.num_qubits) {
        throw ArgumentError("expected " + std::to_string(spec.num_qubits) +
                            " features, got " +
                            std::to_string(input.features.size()));
    }
    return {encode_features(input.features), input.params};
}

void check_input(const CircuitSpec &spec, const EncodedInput &input) {
    spec.validate();
    if (input.angles.size() != spec.num_qubits) {
        throw ArgumentError("expected " + std::to_string(spec.num_qubits) +
                            " encoding angles, got " +
                            std::to_string(input.angles.size()));
    }
    if (input.params.size() != spec.param_count()) {
        throw ArgumentError("expected " + std::to_string(spec.param_count()) +
                            " trainable angles, got " +
                            std::to_string(input.params.size()));
    }
}

std::size_t gate_count(const CircuitSpec &spec) noexcept {
    const std::size_t q = spec.num_qubits;
    return 2 * q + spec.q_depth * (q + (q - 1));
}

Circuit build_circuit(const CircuitSpec &spec, const EncodedInput &input) {
    check_input(spec, input);
    const std::size_t q = spec.num_qubits;
    Circuit ops;
    ops.reserve(gate_count(spec));
    for (std::size_t w = 0; w < q; ++w) {
        ops.push_back({sim::Gate::h(w), std::nullopt});
    }
    for (std::size_t w = 0; w < q; ++w) {
        ops.push_back({sim::Gate::ry(w, input.angles[w]), w});
    }
    for (std::size_t block = 0; block < spec.q_depth; ++block) {
        for (std::size_t w = 0; w + 1 < q; w += 2) {
            ops.push_back({sim::Gate::cx(w, w + 1), std::nullopt});
        }
        for (std::size_t w = 1; w + 1 < q; w += 2) {
            ops.push_back({sim::Gate::cx(w, w + 1), std::nullopt});
        }
        for (std::size_t w = 0; w < q; ++w) {
            const std::size_t p = block * q + w;
            ops.push_back({sim::Gate::ry(w, input.params[p]), q + p});
        }
    }
    return ops;
}

Circuit build_circuit(const CircuitSpec &spec, const QNodeInput &input) {
    return build_circuit(spec, encode(spec, input));
}

std::string describe(const CircuitSpec &spec, const Circuit &circuit) {
    std::ostringstream os;
    os << "circuit: " << spec.num_qubits << " qubits, q_depth " << spec.q_depth
       << ", " << circuit.size() << " gates\n";
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const auto &op = circuit[i];
        os << "  " << i << ": " << op.gate.to_string();
        if (op.slot) {
            if (*op.slot < spec.num_qubits) {
                os << "  [encoding " << *op.slot << "]";
            } else {
                const std::size_t p = *op.slot - spec.num_qubits;
                os << "  [theta " << p / spec.num_qubits << ","
                   << p % spec.num_qubits << "]";
            }
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::string context(std::size_t index, const std::exception &e) {
    return "evaluate_batch: element " + std::to_string(index) + ": " + e.what();
}

QNodeOutput readout(const sim::StateVector &state, const EvalMode &mode) {
    const std::size_t q = state.num_qubits();
    QNodeOutput out;
    out.z.assign(q, 0.0);
    if (const auto *shots = std::get_if<Shots>(&mode)) {
        const auto counts = sim::sample(state, shots->shots, shots->seed);
        for (std::size_t w = 0; w < q; ++w) {
            out.z[w] = sim::estimate_z_from_counts(counts, w);
        }
        return out;
    }
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        for (std::size_t w = 0; w < q; ++w) {
            out.z[w] += ((i >> w) & 1U) ? -p : p;
        }
    }
    return out;
}

} // namespace

QNodeOutput evaluate(const CircuitSpec &spec, const EncodedInput &input,
                     const EvalMode &mode) {
    const Circuit circuit = build_circuit(spec, input);
    auto state = sim::StateVector::zero(spec.num_qubits);
    for (const auto &op : circuit) {
        state.apply(op.gate);
    }
    return readout(state, mode);
}

QNodeOutput evaluate(const CircuitSpec &spec, const QNodeInput &input,
                     const EvalMode &mode) {
    return evaluate(spec, encode(spec, input), mode);
}

std::vector<QNodeOutput> evaluate_batch(const CircuitSpec &spec,
                                        std::span<const QNodeInput> inputs,
                                        const EvalMode &mode) {
    std::vector<QNodeOutput> out(inputs.size());
    std::vector<std::exception_ptr> errors(inputs.size());
    parallel_for(inputs.size(), [&](std::size_t i) {
        try {
            out[i] = evaluate(spec, inputs[i], mode);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!errors[i]) {
            continue;
        }
        try {
            std::rethrow_exception(errors[i]);
        } catch (const ArgumentError &e) {
            throw ArgumentError(context(i, e));
        } catch (const DataError &e) {
            throw DataError(context(i, e));
        } catch (const CapacityError &e) {
            throw CapacityError(context(i, e));
        } catch (const std::exception &e) {
            throw Error(context(i, e));
        }
    }
    return out;
}

} // namespace qcrack::circuit
