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
 * Bias-corrected Adam over a flat parameter vector.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qcrack::model {

struct AdamConfig {
    double lr{1e-3};
    double beta1{0.9};
    double beta2{0.999};
    double eps{1e-8};
};

struct AdamState {
    AdamConfig config{};
    std::vector<double> m;
    std::vector<double> v;
    std::uint64_t step{0};

    AdamState() = default;
    explicit AdamState(std::size_t n, AdamConfig cfg = {})
        : config{cfg}, m(n, 0.0), v(n, 0.0) {}
};

/// One update. Throws ArgumentError if the three sizes differ.
void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState &state);

} // namespace qcrack::model
