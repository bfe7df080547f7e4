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
 * Classical-quantum-classical classifier:
 *
 *   features --Linear(F, Q)--> h --(pi/2)tanh--> angles --circuit--> <Z>
 *            --Linear(Q, 2)--> logits --softmax cross-entropy
 *
 * Label 1 is "crack" (the positive class), label 0 is "no crack".
 */
#pragma once

#include "qcrack/Circuit.hpp"
#include "qcrack/Gradient.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcrack::model {

struct LinearLayer {
    std::size_t in_dim{0};
    std::size_t out_dim{0};
    std::vector<double> weights; ///< row-major, out_dim x in_dim
    std::vector<double> bias;    ///< out_dim

    static LinearLayer zeros(std::size_t in_dim, std::size_t out_dim);

    [[nodiscard]] std::vector<double> apply(std::span<const double> x) const;
    void validate() const;
};

struct HybridModel {
    LinearLayer pre;
    circuit::CircuitSpec qspec;
    std::vector<double> qparams; ///< [block][qubit], block-major
    LinearLayer post;

    /// Linear weights uniform in +-1/sqrt(in_dim), biases zero; qparams uniform in
    /// +-0.1. Deterministic in `seed`.
    static HybridModel init(std::size_t feature_dim, const circuit::CircuitSpec &spec,
                            std::uint64_t seed);

    [[nodiscard]] std::size_t feature_dim() const noexcept { return pre.in_dim; }

    /// Flat parameter order: pre.weights, pre.bias, qparams, post.weights,
    /// post.bias.
    [[nodiscard]] std::size_t parameter_count() const noexcept;
    [[nodiscard]] std::vector<double> parameters() const;
    void set_parameters(std::span<const double> flat);

    /// Throws ArgumentError if layer shapes and the circuit disagree.
    void validate() const;
};

struct Example {
    std::string id;
    std::vector<double> features;
    int label{0};
};

struct ForwardTrace {
    std::vector<double> hidden;
    std::vector<double> angles;
    std::vector<double> z;
    std::vector<double> logits;
};

/// Full forward pass. Charges one forward call when `ledger` is given.
[[nodiscard]] ForwardTrace trace(const HybridModel &model,
                                 std::span<const double> features,
                                 const circuit::EvalMode &mode = circuit::Exact{},
                                 autodiff::CallLedger *ledger = nullptr);

[[nodiscard]] std::vector<double> forward(const HybridModel &model,
                                          std::span<const double> features,
                                          const circuit::EvalMode &mode = circuit::Exact{},
                                          autodiff::CallLedger *ledger = nullptr);

/// Stable -log softmax(logits)[label].
[[nodiscard]] double cross_entropy(std::span<const double> logits, int label);

/// 1 when logits[1] > logits[0], else 0.
[[nodiscard]] int predicted_label(std::span<const double> logits) noexcept;

struct LossAndGrad {
    double loss{0.0};             ///< mean over the batch
    std::vector<double> gradient; ///< flat, same order as parameters()
    std::size_t correct{0};
};

/**
 * Mean cross-entropy of the batch and its gradient with respect to every
 * trainable parameter. The quantum Jacobian comes from `method`; the ledger
 * is charged only for circuit executions (one forward plus the method's
 * backward calls per sample). In shot mode, sample i uses the stream
 * `derive_seed(mode.seed, i)`.
 */
[[nodiscard]] LossAndGrad loss_and_grad(const HybridModel &model,
                                        std::span<const Example *const> batch,
                                        const autodiff::GradMethod &method,
                                        autodiff::CallLedger &ledger,
                                        const circuit::EvalMode &mode = circuit::Exact{});

} // namespace qcrack::model
