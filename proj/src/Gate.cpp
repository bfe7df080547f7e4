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

#include "qcrack/Gate.hpp"

#include "qcrack/Error.hpp"

#include <cmath>
#include <cstdio>

namespace qcrack::sim {

std::string Gate::to_string() const {
    char buf[96];
    switch (kind) {
    case GateKind::X:
        std::snprintf(buf, sizeof buf, "X q%zu", target);
        break;
    case GateKind::H:
        std::snprintf(buf, sizeof buf, "H q%zu", target);
        break;
    case GateKind::Ry:
        std::snprintf(buf, sizeof buf, "Ry(%.6f) q%zu", angle, target);
        break;
    case GateKind::CX:
        std::snprintf(buf, sizeof buf, "CX q%zu->q%zu", control.value_or(0),
                      target);
        break;
    case GateKind::CRy:
        std::snprintf(buf, sizeof buf, "CRy(%.6f) q%zu->q%zu", angle,
                      control.value_or(0), target);
        break;
    }
    return buf;
}

Matrix2 target_matrix(const Gate &gate) {
    switch (gate.kind) {
    case GateKind::X:
    case GateKind::CX:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        return {r, r, r, -r};
    }
    case GateKind::Ry:
    case GateKind::CRy: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        return {c, -s, s, c};
    }
    }
    throw ArgumentError("unknown gate kind");
}

Matrix2 target_matrix_derivative(const Gate &gate) {
    if (!gate.is_parametric()) {
        throw ArgumentError("gate " + gate.to_string() + " has no angle");
    }
    const double c = std::cos(gate.angle / 2.0);
    const double s = std::sin(gate.angle / 2.0);
    return {-0.5 * s, -0.5 * c, 0.5 * c, -0.5 * s};
}

Gate adjoint(const Gate &gate) {
    Gate inv = gate;
    if (gate.is_parametric()) {
        inv.angle = -gate.angle;
    }
    return inv;
}

} // namespace qcrack::sim
