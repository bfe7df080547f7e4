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
 * Hand-rolled random generators for property tests.
 */
#pragma once

#include "qcrack/Gate.hpp"
#include "qcrack/Rng.hpp"

#include <cstddef>
#include <numbers>
#include <vector>

namespace qcrack::testing {

inline sim::Gate random_gate(Rng &rng, std::size_t num_qubits) {
    const double angle = rng.uniform(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    const std::size_t kinds = num_qubits >= 2 ? 5 : 3;
    const auto kind = rng.below(kinds);
    const auto target = static_cast<std::size_t>(rng.below(num_qubits));
    if (kind < 3) {
        switch (kind) {
        case 0:
            return sim::Gate::x(target);
        case 1:
            return sim::Gate::h(target);
        default:
            return sim::Gate::ry(target, angle);
        }
    }
    auto control = static_cast<std::size_t>(rng.below(num_qubits - 1));
    if (control >= target) {
        ++control;
    }
    return kind == 3 ? sim::Gate::cx(control, target) : sim::Gate::cry(control, target, angle);
}

inline std::vector<sim::Gate> random_sequence(Rng &rng, std::size_t num_qubits,
                                              std::size_t length) {
    std::vector<sim::Gate> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(random_gate(rng, num_qubits));
    }
    return out;
}

inline std::vector<double> random_vector(Rng &rng, std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (auto &v : out) {
        v = rng.uniform(lo, hi);
    }
    return out;
}

} // namespace qcrack::testing
