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

#include "qcrack/HybridModel.hpp"

#include "qcrack/Error.hpp"
#include "qcrack/Rng.hpp"

#include <algorithm>
#include <cmath>

namespace qcrack::model {

LinearLayer LinearLayer::zeros(std::size_t in_dim, std::size_t out_dim) {
    return {in_dim, out_dim, std::vector<double>(in_dim * out_dim, 0.0),
            std::vector<double>(out_dim, 0.0)};
}

std::vector<double> LinearLayer::apply(std::span<const double> x) const {
    if (x.size() != in_dim) {
        throw ArgumentError("linear layer expects " + std::to_string(in_dim) +
                            " inputs, got " + std::to_string(x.size()));
    }
    std::vector<double> y(bias);
    for (std::size_t o = 0; o < out_dim; ++o) {
        const double *row = weights.data() + o * in_dim;
        double acc = 0.0;
        for (std::size_t i = 0; i < in_dim; ++i) {
            acc += row[i] * x[i];
        }
        y[o] += acc;
    }
    return y;
}

void LinearLayer::validate() const {
    if (in_dim == 0 || out_dim == 0 || weights.size() != in_dim * out_dim ||
        bias.size() != out_dim) {
        throw ArgumentError("linear layer shape mismatch");
    }
    auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(weights.begin(), weights.end(), finite) ||
        !std::all_of(bias.begin(), bias.end(), finite)) {
        throw DataError("linear layer has non-finite entries");
    }
}

namespace {

LinearLayer uniform_layer(std::size_t in_dim, std::size_t out_dim, Rng &rng) {
    auto layer = LinearLayer::zeros(in_dim, out_dim);
    const double bound = 1.0 / std::sqrt(static_cast<double>(in_dim));
    for (auto &w : layer.weights) {
        w = rng.uniform(-bound, bound);
    }
    return layer;
}

} // namespace

HybridModel HybridModel::init(std::size_t feature_dim,
                              const circuit::CircuitSpec &spec, std::uint64_t seed) {
    spec.validate();
    if (feature_dim == 0) {
        throw ArgumentError("feature dimension must be positive");
    }
    Rng pre_rng(seed, 1);
    Rng q_rng(seed, 2);
    Rng post_rng(seed, 3);
    HybridModel m;
    m.qspec = spec;
    m.pre = uniform_layer(feature_dim, spec.num_qubits, pre_rng);
    m.qparams.resize(spec.param_count());
    for (auto &t : m.qparams) {
        t = q_rng.uniform(-0.1, 0.1);
    }
    m.post = uniform_layer(spec.num_qubits, 2, post_rng);
    return m;
}

std::size_t HybridModel::parameter_count() const noexcept {
    return pre.weights.size() + pre.bias.size() + qparams.size() +
           post.weights.size() + post.bias.size();
}

std::vector<double> HybridModel::parameters() const {
    std::vector<double> flat;
    flat.reserve(parameter_count());
    for (const auto *part : {&pre.weights, &pre.bias, &qparams, &post.weights, &post.bias}) {
        flat.insert(flat.end(), part->begin(), part->end());
    }
    return flat;
}

void HybridModel::set_parameters(std::span<const double> flat) {
    if (flat.size() != parameter_count()) {
        throw ArgumentError("expected " + std::to_string(parameter_count()) +
                            " parameters, got " + std::to_string(flat.size()));
    }
    auto it = flat.begin();
    for (auto *part : {&pre.weights, &pre.bias, &qparams, &post.weights, &post.bias}) {
        std::copy_n(it, part->size(), part->begin());
        it += static_cast<std::ptrdiff_t>(part->size());
    }
}

void HybridModel::validate() const {
    qspec.validate();
    pre.validate();
    post.validate();
    if (pre.out_dim != qspec.num_qubits || post.in_dim != qspec.num_qubits) {
        throw ArgumentError("linear layers do not match the circuit width " +
                            std::to_string(qspec.num_qubits));
    }
    if (post.out_dim != 2) {
        throw ArgumentError("output layer must produce 2 logits");
    }
    if (qparams.size() != qspec.param_count()) {
        throw ArgumentError("expected " + std::to_string(qspec.param_count()) +
                            " circuit parameters, got " + std::to_string(qparams.size()));
    }
}

ForwardTrace trace(const HybridModel &model, std::span<const double> features,
                   const circuit::EvalMode &mode, autodiff::CallLedger *ledger) {
    ForwardTrace t;
    t.hidden = model.pre.apply(features);
    t.angles = circuit::encode_features(t.hidden);
    const circuit::EncodedInput input{t.angles, model.qparams};
    t.z = ledger ? autodiff::forward(model.qspec, input, *ledger, mode).z
                 : circuit::evaluate(model.qspec, input, mode).z;
    t.logits = model.post.apply(t.z);
    return t;
}

std::vector<double> forward(const HybridModel &model, std::span<const double> features,
                            const circuit::EvalMode &mode, autodiff::CallLedger *ledger) {
    return trace(model, features, mode, ledger).logits;
}

double cross_entropy(std::span<const double> logits, int label) {
    if (label != 0 && label != 1) {
        throw DataError("label must be 0 or 1, got " + std::to_string(label));
    }
    const double mx = std::max(logits[0], logits[1]);
    const double lse = mx + std::log(std::exp(logits[0] - mx) + std::exp(logits[1] - mx));
    return lse - logits[static_cast<std::size_t>(label)];
}

int predicted_label(std::span<const double> logits) noexcept {
    return logits[1] > logits[0] ? 1 : 0;
}

LossAndGrad loss_and_grad(const HybridModel &model,
                          std::span<const Example *const> batch,
                          const autodiff::GradMethod &method,
                          autodiff::CallLedger &ledger,
                          const circuit::EvalMode &mode) {
    if (batch.empty()) {
        throw ArgumentError("loss_and_grad: empty batch");
    }
    for (const Example *ex : batch) {
        if (ex->label != 0 && ex->label != 1) {
            throw DataError("sample '" + ex->id + "': label must be 0 or 1, got " +
                            std::to_string(ex->label));
        }
    }
    const std::size_t q = model.qspec.num_qubits;
    const std::size_t f = model.pre.in_dim;
    const std::size_t np = model.qparams.size();

    LossAndGrad out;
    out.gradient.assign(model.parameter_count(), 0.0);
    double *g_pre_w = out.gradient.data();
    double *g_pre_b = g_pre_w + q * f;
    double *g_q = g_pre_b + q;
    double *g_post_w = g_q + np;
    double *g_post_b = g_post_w + 2 * q;

    const double inv_batch = 1.0 / static_cast<double>(batch.size());
    for (std::size_t s = 0; s < batch.size(); ++s) {
        const Example &ex = *batch[s];
        const auto hidden = model.pre.apply(ex.features);
        const circuit::EncodedInput input{circuit::encode_features(hidden), model.qparams};

        circuit::EvalMode sample_mode = mode;
        if (auto *shots = std::get_if<circuit::Shots>(&sample_mode)) {
            shots->seed = derive_seed(shots->seed, s);
        }
        const auto vj = autodiff::value_and_jacobian(model.qspec, input, method, ledger,
                                                     sample_mode);
        const auto &z = vj.value.z;
        const auto &jac = vj.jacobian;
        const auto logits = model.post.apply(z);

        out.loss += cross_entropy(logits, ex.label) * inv_batch;
        if (predicted_label(logits) == ex.label) {
            ++out.correct;
        }

        // d loss / d logits = softmax - onehot
        const double mx = std::max(logits[0], logits[1]);
        const double e0 = std::exp(logits[0] - mx);
        const double e1 = std::exp(logits[1] - mx);
        double dlogit[2] = {e0 / (e0 + e1), e1 / (e0 + e1)};
        dlogit[ex.label] -= 1.0;
        dlogit[0] *= inv_batch;
        dlogit[1] *= inv_batch;

        std::vector<double> dz(q, 0.0);
        for (std::size_t k = 0; k < 2; ++k) {
            g_post_b[k] += dlogit[k];
            for (std::size_t j = 0; j < q; ++j) {
                g_post_w[k * q + j] += dlogit[k] * z[j];
                dz[j] += model.post.weights[k * q + j] * dlogit[k];
            }
        }

        for (std::size_t p = 0; p < np; ++p) {
            double acc = 0.0;
            for (std::size_t w = 0; w < q; ++w) {
                acc += dz[w] * jac.dparam(w, p);
            }
            g_q[p] += acc;
        }

        const auto dscale = circuit::encode_features_derivative(hidden);
        for (std::size_t i = 0; i < q; ++i) {
            double dangle = 0.0;
            for (std::size_t w = 0; w < q; ++w) {
                dangle += dz[w] * jac.dinput(w, i);
            }
            const double dh = dangle * dscale[i];
            g_pre_b[i] += dh;
            double *row = g_pre_w + i * f;
            for (std::size_t k = 0; k < f; ++k) {
                row[k] += dh * ex.features[k];
            }
        }
    }
    return out;
}

} // namespace qcrack::model
