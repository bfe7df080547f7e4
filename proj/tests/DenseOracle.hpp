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
 * Test-only reference simulator: builds the full 2^Q x 2^Q unitary of every
 * gate from Kronecker products and multiplies densely. Shares no code with
 * the stride kernels under test.
 */
#pragma once

#include "qcrack/Gate.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace qcrack::oracle {

using Complex = std::complex<double>;

struct Dense {
    std::size_t n{0};
    std::vector<Complex> m; // row-major

    static Dense identity(std::size_t n) {
        Dense d{n, std::vector<Complex>(n * n)};
        for (std::size_t i = 0; i < n; ++i) {
            d.m[i * n + i] = 1.0;
        }
        return d;
    }
    Complex &at(std::size_t r, std::size_t c) { return m[r * n + c]; }
    Complex at(std::size_t r, std::size_t c) const { return m[r * n + c]; }
};

inline Dense kron(const Dense &a, const Dense &b) {
    Dense out{a.n * b.n, std::vector<Complex>(a.n * b.n * a.n * b.n)};
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t j = 0; j < a.n; ++j) {
            for (std::size_t k = 0; k < b.n; ++k) {
                for (std::size_t l = 0; l < b.n; ++l) {
                    out.at(i * b.n + k, j * b.n + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return out;
}

inline Dense add(const Dense &a, const Dense &b) {
    Dense out = a;
    for (std::size_t i = 0; i < out.m.size(); ++i) {
        out.m[i] += b.m[i];
    }
    return out;
}

inline Dense mul(const Dense &a, const Dense &b) {
    Dense out{a.n, std::vector<Complex>(a.n * a.n)};
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t k = 0; k < a.n; ++k) {
            for (std::size_t j = 0; j < a.n; ++j) {
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return out;
}

inline Dense two(Complex a, Complex b, Complex c, Complex d) { return {2, {a, b, c, d}}; }

/// Single-qubit matrix of a gate kind, written out from the textbook forms.
inline Dense base_matrix(sim::GateKind kind, double angle) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
    case sim::GateKind::X:
    case sim::GateKind::CX:
        return two(0, 1, 1, 0);
    case sim::GateKind::H:
        return two(r, r, r, -r);
    case sim::GateKind::Ry:
    case sim::GateKind::CRy:
        return two(std::cos(angle / 2), -std::sin(angle / 2), std::sin(angle / 2),
                   std::cos(angle / 2));
    }
    return Dense::identity(2);
}

/// Kronecker product with qubit Q-1 as the leftmost factor (little-endian
/// basis indices). `factor(q)` supplies the 2x2 block for qubit q.
template <class F> Dense kron_chain(std::size_t num_qubits, F factor) {
    Dense out = factor(num_qubits - 1);
    for (std::size_t q = num_qubits - 1; q-- > 0;) {
        out = kron(out, factor(q));
    }
    return out;
}

inline Dense full_unitary(const sim::Gate &g, std::size_t num_qubits) {
    const Dense id = Dense::identity(2);
    const Dense u = base_matrix(g.kind, g.angle);
    if (!g.control) {
        return kron_chain(num_qubits, [&](std::size_t q) { return q == g.target ? u : id; });
    }
    const Dense p0 = two(1, 0, 0, 0);
    const Dense p1 = two(0, 0, 0, 1);
    const std::size_t c = *g.control;
    const Dense off = kron_chain(num_qubits, [&](std::size_t q) { return q == c ? p0 : id; });
    const Dense on = kron_chain(num_qubits, [&](std::size_t q) {
        if (q == c) {
            return p1;
        }
        return q == g.target ? u : id;
    });
    return add(off, on);
}

inline std::vector<Complex> apply(const Dense &u, const std::vector<Complex> &v) {
    std::vector<Complex> out(v.size());
    for (std::size_t i = 0; i < u.n; ++i) {
        for (std::size_t j = 0; j < u.n; ++j) {
            out[i] += u.at(i, j) * v[j];
        }
    }
    return out;
}

} // namespace qcrack::oracle
