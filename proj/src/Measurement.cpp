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

#include "qcrack/Measurement.hpp"

#include "qcrack/Error.hpp"
#include "qcrack/Rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qcrack::sim {

ShotCounts ShotCounts::from_map(std::map<std::string, std::uint64_t> counts) {
    ShotCounts sc;
    for (const auto &[_, n] : counts) {
        sc.shots += n;
    }
    sc.counts = std::move(counts);
    return sc;
}

std::string basis_label(std::size_t index, std::size_t num_qubits) {
    std::string s(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((index >> q) & 1U) {
            s[num_qubits - 1 - q] = '1';
        }
    }
    return s;
}

ShotCounts sample(const StateVector &state, std::uint64_t shots,
                  std::uint64_t seed) {
    if (shots < 1) {
        throw ArgumentError("shots must be >= 1");
    }
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    // Draws are scaled by the actual total so rounding in the norm cannot
    // leave a gap at the top of the distribution.
    std::vector<std::uint64_t> hist(amps.size(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        ++hist[static_cast<std::size_t>(it - cdf.begin())];
    }
    ShotCounts out;
    out.shots = shots;
    for (std::size_t i = 0; i < hist.size(); ++i) {
        if (hist[i] > 0) {
            out.counts.emplace(basis_label(i, state.num_qubits()), hist[i]);
        }
    }
    return out;
}

double estimate_z_from_counts(const ShotCounts &counts, std::size_t qubit) {
    if (counts.counts.empty() || counts.shots == 0) {
        throw DataError("empty shot counts");
    }
    std::size_t width = 0;
    std::uint64_t total = 0;
    std::int64_t balance = 0;
    for (const auto &[bits, n] : counts.counts) {
        if (bits.empty() ||
            bits.find_first_not_of("01") != std::string::npos) {
            throw DataError("malformed bitstring '" + bits + "'");
        }
        if (width == 0) {
            width = bits.size();
        } else if (bits.size() != width) {
            throw DataError("bitstring '" + bits + "' has inconsistent width");
        }
        if (qubit >= width) {
            throw ArgumentError("qubit " + std::to_string(qubit) +
                            " outside bitstring width " + std::to_string(width));
        }
        const bool one = bits[width - 1 - qubit] == '1';
        balance += one ? -static_cast<std::int64_t>(n) : static_cast<std::int64_t>(n);
        total += n;
    }
    if (total != counts.shots) {
        throw DataError("counts sum to " + std::to_string(total) + ", expected " +
                        std::to_string(counts.shots) + " shots");
    }
    return static_cast<double>(balance) / static_cast<double>(counts.shots);
}

BlochCoords bloch_coords(const StateVector &state) {
    if (state.num_qubits() != 1) {
        throw ArgumentError("bloch_coords requires a single-qubit state, got " +
                            std::to_string(state.num_qubits()) + " qubits");
    }
    const Complex alpha = state[0];
    const Complex beta = state[1];
    const double a = std::abs(alpha);
    BlochCoords out;
    out.theta = 2.0 * std::acos(std::clamp(a, 0.0, 1.0));
    if (std::sin(out.theta / 2.0) < 1e-12 || a < 1e-12) {
        out.phi = 0.0;
        return out;
    }
    // Rotate the global phase away so alpha is real and positive.
    const Complex b = beta * std::conj(alpha) / a;
    double phi = std::arg(b);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (phi < 0.0) {
        phi += two_pi;
    }
    if (phi >= two_pi) {
        phi -= two_pi;
    }
    out.phi = phi;
    return out;
}

} // namespace qcrack::sim
