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

#include "qcrack/StateVector.hpp"

#include "qcrack/Error.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qcrack::sim {

namespace kernels {

void apply_matrix(std::span<Complex> amps, std::size_t target,
                  const std::size_t *control, const Matrix2 &m) {
    const std::size_t n = amps.size();
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t cmask = control ? (std::size_t{1} << *control) : 0;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const std::size_t i0 = base + k;
            if ((i0 & cmask) != cmask) {
                continue;
            }
            const std::size_t i1 = i0 + stride;
            const Complex a = amps[i0];
            const Complex b = amps[i1];
            amps[i0] = m[0] * a + m[1] * b;
            amps[i1] = m[2] * a + m[3] * b;
        }
    }
}

namespace {

void swap_pairs(std::span<Complex> amps, std::size_t target, std::size_t cmask) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const std::size_t i0 = base + k;
            if ((i0 & cmask) == cmask) {
                std::swap(amps[i0], amps[i0 + stride]);
            }
        }
    }
}

// Real 2x2 rotation; avoids complex-by-complex products for the common case.
void rotate_real(std::span<Complex> amps, std::size_t target, std::size_t cmask,
                 double c, double s) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const std::size_t i0 = base + k;
            if ((i0 & cmask) != cmask) {
                continue;
            }
            const std::size_t i1 = i0 + stride;
            const Complex a = amps[i0];
            const Complex b = amps[i1];
            amps[i0] = c * a - s * b;
            amps[i1] = s * a + c * b;
        }
    }
}

} // namespace

void apply_gate(std::span<Complex> amps, const Gate &gate) {
    const std::size_t cmask =
        gate.control ? (std::size_t{1} << *gate.control) : 0;
    switch (gate.kind) {
    case GateKind::X:
    case GateKind::CX:
        swap_pairs(amps, gate.target, cmask);
        return;
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        const std::size_t stride = std::size_t{1} << gate.target;
        for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
            for (std::size_t k = 0; k < stride; ++k) {
                const std::size_t i0 = base + k;
                const Complex a = amps[i0];
                const Complex b = amps[i0 + stride];
                amps[i0] = r * (a + b);
                amps[i0 + stride] = r * (a - b);
            }
        }
        return;
    }
    case GateKind::Ry:
    case GateKind::CRy:
        rotate_real(amps, gate.target, cmask, std::cos(gate.angle / 2.0),
                    std::sin(gate.angle / 2.0));
        return;
    }
}

} // namespace kernels

void check_gate(const Gate &gate, std::size_t num_qubits) {
    if (gate.target >= num_qubits) {
        throw ArgumentError("gate " + gate.to_string() + ": target out of range for " +
                            std::to_string(num_qubits) + " qubits");
    }
    if (gate.is_controlled() != gate.control.has_value()) {
        throw ArgumentError("gate " + gate.to_string() +
                            ": control presence does not match kind");
    }
    if (gate.control) {
        if (*gate.control >= num_qubits) {
            throw ArgumentError("gate " + gate.to_string() +
                                ": control out of range for " +
                                std::to_string(num_qubits) + " qubits");
        }
        if (*gate.control == gate.target) {
            throw ArgumentError("gate " + gate.to_string() +
                                ": control equals target");
        }
    }
}

StateVector StateVector::zero(std::size_t num_qubits, std::size_t max_qubits) {
    if (num_qubits < 1 || num_qubits > max_qubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(max_qubits) + "]");
    }
    std::vector<Complex> amps(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps[0] = 1.0;
    return StateVector{num_qubits, std::move(amps)};
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw ArgumentError("amplitude count " + std::to_string(amps.size()) +
                            " is not a power of two >= 2");
    }
    const std::size_t q = std::countr_zero(amps.size());
    if (q > kDefaultMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(q) + " exceeds cap");
    }
    double norm = 0.0;
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DataError("non-finite amplitude");
        }
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > 1e-10) {
        throw DataError("amplitudes not normalized (norm^2 = " +
                        std::to_string(norm) + ")");
    }
    return StateVector{q, std::move(amps)};
}

void StateVector::apply(const Gate &gate) {
    check_gate(gate, num_qubits_);
    kernels::apply_gate(amps_, gate);
}

double StateVector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

StateVector zero_state(std::size_t num_qubits) {
    return StateVector::zero(num_qubits);
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

double z_expectation(const StateVector &state, std::size_t qubit) {
    if (qubit >= state.num_qubits()) {
        throw ArgumentError("qubit " + std::to_string(qubit) +
                            " out of range for " +
                            std::to_string(state.num_qubits()) + " qubits");
    }
    const std::size_t mask = std::size_t{1} << qubit;
    double z = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        z += (i & mask) ? -p : p;
    }
    return z;
}

nlohmann::json to_json(const StateVector &state) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    return {{"num_qubits", state.num_qubits()}, {"amps", std::move(amps)}};
}

} // namespace qcrack::sim
