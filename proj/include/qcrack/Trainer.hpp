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
 * Epoch loop, test evaluation, and the tabular/JSON records they produce.
 */
#pragma once

#include "qcrack/Adam.hpp"
#include "qcrack/Gradient.hpp"
#include "qcrack/HybridModel.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace qcrack::model {

struct TrainConfig {
    std::size_t epochs{1};
    autodiff::GradMethod method{autodiff::Backprop{}};
    std::uint64_t seed{0};
    std::uint64_t shots{0}; ///< 0 selects exact expectations
    std::size_t batch_size{1};
    bool timing{true}; ///< false writes 0 for elapsed times
    AdamConfig adam{};
};

struct EpochMetrics {
    std::size_t epoch{0};
    double train_loss{0.0};
    double train_acc{0.0};
    double val_loss{0.0};
    double val_acc{0.0};
    autodiff::LedgerCounts calls;
    std::uint64_t predicted_calls{0};
    double elapsed_ms{0.0};
};

struct TrainResult {
    HybridModel model;
    AdamState optimizer;
    std::vector<EpochMetrics> epochs;
    autodiff::LedgerCounts total;
};

using EpochCallback = std::function<void(const EpochMetrics &)>;

/**
 * Per epoch: shuffle the training set (stream `epoch + 1` of `seed`), take one
 * Adam step per batch, then score the validation set with forward passes only.
 * Each epoch's ledger is reconciled against the closed-form count; a mismatch
 * throws ReconciliationError. Exact mode is bit-reproducible for a fixed seed.
 *
 * Throws ArgumentError for an empty training set or a zero batch size.
 */
[[nodiscard]] TrainResult train(HybridModel model, std::span<const Example> train_set,
                                std::span<const Example> val_set,
                                const TrainConfig &config,
                                const EpochCallback &on_epoch = {});

struct ConfusionMatrix {
    std::size_t tp{0}; ///< crack predicted as crack
    std::size_t fp{0}; ///< no crack predicted as crack
    std::size_t fn{0}; ///< crack predicted as no crack
    std::size_t tn{0};

    [[nodiscard]] std::size_t total() const noexcept { return tp + fp + fn + tn; }
};

struct TestReport {
    double loss{0.0};
    double accuracy{0.0};
    ConfusionMatrix confusion;
    std::vector<std::string> misclassified;
};

/// Mean loss, accuracy, and confusion counts. Throws ArgumentError when empty.
[[nodiscard]] TestReport evaluate_test(const HybridModel &model,
                                       std::span<const Example> test_set,
                                       const circuit::EvalMode &mode = circuit::Exact{},
                                       autodiff::CallLedger *ledger = nullptr);

inline constexpr const char *kMetricsHeader =
    "epoch,train_loss,train_acc,val_loss,val_acc,n_calls,elapsed_ms";

[[nodiscard]] std::string metrics_csv_row(const EpochMetrics &m);
[[nodiscard]] std::string metrics_csv(std::span<const EpochMetrics> rows);

[[nodiscard]] nlohmann::json to_json(const ConfusionMatrix &cm);
[[nodiscard]] nlohmann::json to_json(const TestReport &report);

} // namespace qcrack::model
