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

#include "qcrack/Trainer.hpp"

#include "qcrack/Error.hpp"
#include "qcrack/Rng.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>

namespace qcrack::model {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Streams >= kEvalStreamBase seed shot sampling; lower ones shuffle epochs.
constexpr std::uint64_t kEvalStreamBase = std::uint64_t{1} << 40U;

} // namespace

TrainResult train(HybridModel model, std::span<const Example> train_set,
                  std::span<const Example> val_set, const TrainConfig &config,
                  const EpochCallback &on_epoch) {
    model.validate();
    autodiff::validate(config.method);
    if (train_set.empty()) {
        throw ArgumentError("training split is empty");
    }
    if (config.batch_size == 0) {
        throw ArgumentError("batch size must be positive");
    }
    if (config.shots > 0 && std::holds_alternative<autodiff::Backprop>(config.method)) {
        throw CapabilityError("backprop cannot be combined with shot-based evaluation");
    }

    TrainResult result;
    result.optimizer = AdamState(model.parameter_count(), config.adam);
    const autodiff::LedgerContext context{train_set.size(), val_set.size(),
                                          model.qspec.layer_count(),
                                          model.qspec.num_qubits};
    const auto predicted = autodiff::ledger_predict(context.train, context.val,
                                                    context.layers, context.qubits,
                                                    config.method);
    std::uint64_t eval_stream = kEvalStreamBase;
    auto next_mode = [&]() -> circuit::EvalMode {
        if (config.shots == 0) {
            return circuit::Exact{};
        }
        return circuit::Shots{config.shots, derive_seed(config.seed, eval_stream++)};
    };

    std::vector<std::size_t> order(train_set.size());
    std::vector<const Example *> batch;
    auto params = model.parameters();

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        const auto start = Clock::now();
        autodiff::CallLedger ledger(context);
        std::iota(order.begin(), order.end(), std::size_t{0});
        Rng shuffler(config.seed, epoch + 1);
        shuffler.shuffle(std::span{order});

        double loss_sum = 0.0;
        std::size_t correct = 0;
        for (std::size_t pos = 0; pos < order.size(); pos += config.batch_size) {
            const std::size_t end = std::min(order.size(), pos + config.batch_size);
            batch.clear();
            for (std::size_t k = pos; k < end; ++k) {
                batch.push_back(&train_set[order[k]]);
            }
            const auto lg = loss_and_grad(model, batch, config.method, ledger, next_mode());
            loss_sum += lg.loss * static_cast<double>(batch.size());
            correct += lg.correct;
            adam_step(params, lg.gradient, result.optimizer);
            model.set_parameters(params);
        }

        EpochMetrics m;
        m.epoch = epoch + 1;
        m.train_loss = loss_sum / static_cast<double>(train_set.size());
        m.train_acc = static_cast<double>(correct) / static_cast<double>(train_set.size());
        if (!val_set.empty()) {
            double vloss = 0.0;
            std::size_t vcorrect = 0;
            for (const auto &ex : val_set) {
                const auto logits = forward(model, ex.features, next_mode(), &ledger);
                vloss += cross_entropy(logits, ex.label);
                vcorrect += predicted_label(logits) == ex.label ? 1 : 0;
            }
            m.val_loss = vloss / static_cast<double>(val_set.size());
            m.val_acc = static_cast<double>(vcorrect) / static_cast<double>(val_set.size());
        }
        m.calls = ledger.counts();
        m.predicted_calls = predicted.n_calls();
        autodiff::ledger_reconcile(ledger, config.method);
        m.elapsed_ms = config.timing ? ms_since(start) : 0.0;
        result.total += m.calls;
        result.epochs.push_back(m);
        if (on_epoch) {
            on_epoch(m);
        }
    }
    result.model = std::move(model);
    return result;
}

TestReport evaluate_test(const HybridModel &model, std::span<const Example> test_set,
                         const circuit::EvalMode &mode, autodiff::CallLedger *ledger) {
    if (test_set.empty()) {
        throw ArgumentError("test split is empty");
    }
    TestReport r;
    for (std::size_t i = 0; i < test_set.size(); ++i) {
        const auto &ex = test_set[i];
        circuit::EvalMode sample_mode = mode;
        if (auto *shots = std::get_if<circuit::Shots>(&sample_mode)) {
            shots->seed = derive_seed(shots->seed, i);
        }
        const auto logits = forward(model, ex.features, sample_mode, ledger);
        r.loss += cross_entropy(logits, ex.label);
        const int pred = predicted_label(logits);
        if (pred == 1 && ex.label == 1) {
            ++r.confusion.tp;
        } else if (pred == 1) {
            ++r.confusion.fp;
        } else if (ex.label == 1) {
            ++r.confusion.fn;
        } else {
            ++r.confusion.tn;
        }
        if (pred != ex.label) {
            r.misclassified.push_back(ex.id);
        }
    }
    const auto n = static_cast<double>(test_set.size());
    r.loss /= n;
    r.accuracy = static_cast<double>(r.confusion.tp + r.confusion.tn) / n;
    return r;
}

std::string metrics_csv_row(const EpochMetrics &m) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g,%.12g,%llu,%.3f", m.epoch,
                  m.train_loss, m.train_acc, m.val_loss, m.val_acc,
                  static_cast<unsigned long long>(m.calls.n_calls()), m.elapsed_ms);
    return buf;
}

std::string metrics_csv(std::span<const EpochMetrics> rows) {
    std::string out = kMetricsHeader;
    out += '\n';
    for (const auto &m : rows) {
        out += metrics_csv_row(m);
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const ConfusionMatrix &cm) {
    return {{"tp", cm.tp}, {"fp", cm.fp}, {"fn", cm.fn}, {"tn", cm.tn},
            {"matrix", {{cm.tp, cm.fn}, {cm.fp, cm.tn}}}};
}

nlohmann::json to_json(const TestReport &report) {
    return {{"loss", report.loss},
            {"accuracy", report.accuracy},
            {"confusion", to_json(report.confusion)},
            {"misclassified", report.misclassified}};
}

} // namespace qcrack::model
