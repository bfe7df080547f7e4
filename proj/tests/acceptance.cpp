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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "DenseOracle.hpp"
#include "Generators.hpp"
#include "TempDir.hpp"

#include "qcrack/Circuit.hpp"
#include "qcrack/Gradient.hpp"
#include "qcrack/HybridModel.hpp"
#include "qcrack/Measurement.hpp"
#include "qcrack/Split.hpp"
#include "qcrack/StateVector.hpp"
#include "qcrack/Trainer.hpp"
#include "qcrack/cli/Cli.hpp"
#include "qcrack/cli/RunConfig.hpp"
#include "qcrack/Dataset.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using namespace qcrack;
using autodiff::Backprop;
using autodiff::CallLedger;
using autodiff::FdVariant;
using autodiff::FiniteDiff;
using autodiff::GradMethod;
using autodiff::ParamShift;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass{false};
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

circuit::CircuitSpec make_spec(std::size_t q, std::size_t depth) {
    circuit::CircuitSpec s;
    s.num_qubits = q;
    s.q_depth = depth;
    return s;
}

const std::vector<std::pair<std::string, GradMethod>> &methods() {
    static const std::vector<std::pair<std::string, GradMethod>> m = {
        {"backprop", Backprop{}}, {"finite-diff", FiniteDiff{}}, {"param-shift", ParamShift{}}};
    return m;
}

/// Synthetic patches run through the built-in extractor and split per class.
cli::PreparedData synthetic(std::size_t crack, std::size_t clean, data::SplitConfig ratios,
                            std::uint64_t seed) {
    cli::RunConfig cfg;
    cfg.data.n_crack = crack;
    cfg.data.n_clean = clean;
    cfg.seed = seed;
    cfg.split = ratios;
    return cli::prepare_data(cfg);
}

double max_diff(const autodiff::QNodeJacobian &a, const autodiff::QNodeJacobian &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.d_params.size(); ++i) {
        d = std::max(d, std::abs(a.d_params[i] - b.d_params[i]));
    }
    for (std::size_t i = 0; i < a.d_inputs.size(); ++i) {
        d = std::max(d, std::abs(a.d_inputs[i] - b.d_inputs[i]));
    }
    return d;
}

// ------------------------------------------------------------------ AC1

Outcome ac1_call_counts() {
    std::ostringstream cli_out, cli_err;
    const char *argv[] = {"qcrack", "ledger", "856", "184", "2", "4", "--json"};
    const int code = cli::run(7, argv, cli_out, cli_err);
    const auto table = nlohmann::json::parse(cli_out.str());
    const std::uint64_t want[] = {1040, 7888, 14736};
    bool ok = code == 0;
    std::string detail = "ledger";
    for (std::size_t i = 0; i < 3; ++i) {
        const auto got = table["methods"][methods()[i].first]["n_calls"].get<std::uint64_t>();
        ok = ok && got == want[i];
        detail += " " + std::to_string(got);
    }

    const auto pd = synthetic(723, 500, {0.7, 0.15, 0.15, 0}, 1);
    const auto train_set = pd.subset(pd.split.train);
    const auto val_set = pd.subset(pd.split.val);
    ok = ok && train_set.size() == 856 && val_set.size() == 184;
    detail += "; measured (T=" + std::to_string(train_set.size()) +
              ", V=" + std::to_string(val_set.size()) + ")";
    for (std::size_t i = 0; i < 3; ++i) {
        model::TrainConfig tc;
        tc.epochs = 1;
        tc.method = methods()[i].second;
        tc.seed = 1;
        const auto r = model::train(model::HybridModel::init(pd.feature_dim, make_spec(4, 1), 1),
                                    train_set, val_set, tc);
        const auto got = r.total.n_calls();
        ok = ok && got == want[i] && r.epochs.front().predicted_calls == want[i];
        detail += " " + std::to_string(got);
    }
    return {ok, detail};
}

// ------------------------------------------------------------------ AC2

Outcome ac2_total_calls() {
    testing::TempDir dir("ac2");
    const nlohmann::json config = {
        {"method", {{"kind", "param-shift"}}},
        {"epochs", 10},
        {"seed", 3},
        {"split", {{"train", 0.04}, {"val", 0.04}, {"test", 0.92}}},
        {"data", {{"source", "synthetic"}, {"n_crack", 723}, {"n_clean", 500}}},
        {"out", (dir / "run").string()}};
    data::write_file_atomic(dir / "config.json", config.dump());
    const std::string cfg_path = (dir / "config.json").string();
    const char *argv[] = {"qcrack", "train", "--config", cfg_path.c_str(), "--json"};
    std::ostringstream out, err;
    const int code = cli::run(5, argv, out, err);
    if (code != 0) {
        return {false, "train exited " + std::to_string(code) + ": " + err.str()};
    }
    const auto report = nlohmann::json::parse(data::read_file(dir / "run" / "report.json"));
    const auto calls = report["n_calls"].get<std::uint64_t>();
    const auto t = report["sizes"]["train"].get<std::uint64_t>();
    const auto v = report["sizes"]["val"].get<std::uint64_t>();
    return {calls == 8820 && t == 49 && v == 49,
            "T=" + std::to_string(t) + " V=" + std::to_string(v) +
                ", 10 epochs param-shift, total n_calls " + std::to_string(calls) +
                " (expected 8820)"};
}

// ------------------------------------------------------------------ AC3

Outcome ac3_gradient_parity() {
    Rng rng(303);
    double ps = 0.0, fd = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto spec = make_spec(1 + rng.below(4), 1 + rng.below(6));
        circuit::EncodedInput in{testing::random_vector(rng, spec.num_qubits, -kPi / 2, kPi / 2),
                                 testing::random_vector(rng, spec.param_count(), -kPi, kPi)};
        CallLedger ledger;
        const auto bp = autodiff::jacobian(spec, in, Backprop{}, ledger);
        ps = std::max(ps, max_diff(autodiff::jacobian(spec, in, ParamShift{}, ledger), bp));
        fd = std::max(fd, max_diff(autodiff::jacobian(spec, in, FiniteDiff{1e-3, FdVariant::Central},
                                                      ledger),
                                   bp));
    }

    // End-to-end: 4 features -> 2 qubits (q_depth 1) -> 2 logits, black-box
    // central differences of the mean loss at step 1e-5.
    double composite = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        auto m = model::HybridModel::init(4, make_spec(2, 1), 40 + trial);
        auto flat = m.parameters();
        for (auto &p : flat) {
            p = rng.uniform(-1.5, 1.5);
        }
        m.set_parameters(flat);
        std::vector<model::Example> batch;
        for (int i = 0; i < 3; ++i) {
            batch.push_back({"x", testing::random_vector(rng, 4, -1, 1), i % 2});
        }
        auto loss = [&](const model::HybridModel &mm) {
            double s = 0.0;
            for (const auto &e : batch) {
                s += model::cross_entropy(model::forward(mm, e.features), e.label);
            }
            return s / batch.size();
        };
        std::vector<const model::Example *> ptrs;
        for (const auto &e : batch) {
            ptrs.push_back(&e);
        }
        for (const GradMethod method :
             {GradMethod{Backprop{}}, GradMethod{ParamShift{}},
              GradMethod{FiniteDiff{1e-3, FdVariant::Central}}}) {
            CallLedger ledger;
            const auto g = model::loss_and_grad(m, ptrs, method, ledger).gradient;
            for (std::size_t i = 0; i < flat.size(); ++i) {
                auto probe = m;
                auto plus = flat, minus = flat;
                plus[i] += 1e-5;
                minus[i] -= 1e-5;
                probe.set_parameters(plus);
                const double lp = loss(probe);
                probe.set_parameters(minus);
                const double lm = loss(probe);
                const double n = (lp - lm) / 2e-5;
                composite = std::max(composite, std::abs(g[i] - n) / std::max(std::abs(n), 1e-6));
            }
        }
    }
    const bool ok = ps <= 1e-10 && fd <= 1e-5 && composite <= 1e-4;
    return {ok, "max|PS-BP| " + fmt("%.2e", ps) + " (<=1e-10), max|FDc(1e-3)-BP| " +
                    fmt("%.2e", fd) + " (<=1e-5), composite rel err " + fmt("%.2e", composite) +
                    " (<=1e-4)"};
}

// ------------------------------------------------------------------ AC4

Outcome ac4_simulator() {
    Rng rng(404);
    double oracle_dev = 0.0, norm_dev = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t q = 1 + rng.below(3);
        auto s = sim::zero_state(q);
        std::vector<oracle::Complex> ref(s.size());
        ref[0] = 1.0;
        for (const auto &g : testing::random_sequence(rng, q, 1 + rng.below(50))) {
            s.apply(g);
            ref = oracle::apply(oracle::full_unitary(g, q), ref);
        }
        for (std::size_t i = 0; i < ref.size(); ++i) {
            oracle_dev = std::max(oracle_dev, std::abs(s[i] - ref[i]));
        }
        norm_dev = std::max(norm_dev, std::abs(s.norm_squared() - 1.0));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t q = 1 + rng.below(6);
        auto s = sim::zero_state(q);
        for (const auto &g : testing::random_sequence(rng, q, 100)) {
            s.apply(g);
        }
        norm_dev = std::max(norm_dev, std::abs(s.norm_squared() - 1.0));
    }
    auto ket10 = sim::StateVector::from_amplitudes({0.0, 0.0, 1.0, 0.0});
    ket10.apply(sim::Gate::cx(1, 0));
    const bool cx_exact = ket10[0] == sim::Complex(0) && ket10[1] == sim::Complex(0) &&
                          ket10[2] == sim::Complex(0) && ket10[3] == sim::Complex(1);
    const bool ok = oracle_dev <= 1e-12 && norm_dev <= 1e-12 && cx_exact;
    return {ok, "dense oracle dev " + fmt("%.2e", oracle_dev) + ", norm dev " +
                    fmt("%.2e", norm_dev) + ", CX|10> -> |11> " +
                    (cx_exact ? "bit-exact" : "WRONG")};
}

// ------------------------------------------------------------------ AC5

Outcome ac5_split_table() {
    std::vector<int> labels(723, 1);
    labels.insert(labels.end(), 500, 0);
    auto counts = [&](const data::SplitConfig &cfg) {
        const auto s = data::split(labels, cfg);
        std::vector<std::size_t> out;
        for (const auto *part : {&s.train, &s.val, &s.test}) {
            std::size_t crack = 0;
            for (auto i : *part) {
                crack += labels[i] == 1;
            }
            out.push_back(crack);
            out.push_back(part->size() - crack);
        }
        return out;
    };
    const auto a = counts({0.7, 0.15, 0.15, 0});
    const auto b = counts({0.04, 0.04, 0.92, 0});
    const std::vector<std::size_t> want_a{506, 350, 109, 75, 108, 75};
    const std::vector<std::size_t> want_b{29, 20, 29, 20, 665, 460};
    std::string detail;
    for (const auto *row : {&a, &b}) {
        detail += detail.empty() ? "70/15/15:" : "; 4/4/92:";
        for (std::size_t i = 0; i < row->size(); i += 2) {
            detail += " " + std::to_string((*row)[i]) + "+" + std::to_string((*row)[i + 1]);
        }
    }
    return {a == want_a && b == want_b, detail};
}

// ------------------------------------------------------------------ AC6

Outcome ac6_training() {
    // 175 crack + 175 clean at 4/7, 1/7, 2/7 gives 200 / 50 / 100.
    const auto pd = synthetic(175, 175, {4.0 / 7.0, 1.0 / 7.0, 2.0 / 7.0, 0}, 6);
    const auto train_set = pd.subset(pd.split.train);
    const auto val_set = pd.subset(pd.split.val);
    const auto test_set = pd.subset(pd.split.test);
    if (train_set.size() != 200 || val_set.size() != 50 || test_set.size() != 100) {
        return {false, "unexpected split sizes"};
    }
    std::vector<double> acc;
    std::string detail = "T=200 V=50 test=100, 30 epochs:";
    for (const auto &[name, method] : methods()) {
        const auto t0 = std::chrono::steady_clock::now();
        model::TrainConfig tc;
        tc.epochs = 30;
        tc.method = method;
        tc.seed = 6;
        const auto r = model::train(model::HybridModel::init(pd.feature_dim, make_spec(4, 1), 6),
                                    train_set, val_set, tc);
        const auto report = model::evaluate_test(r.model, test_set);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        acc.push_back(report.accuracy);
        detail += " " + name + " " + fmt("%.2f", 100 * report.accuracy) + "% (" +
                  fmt("%.1f", secs) + " s)";
    }
    const double lo = *std::min_element(acc.begin(), acc.end());
    const double hi = *std::max_element(acc.begin(), acc.end());
    detail += ", spread " + fmt("%.2f", 100 * (hi - lo)) + " pts";
    return {lo >= 0.9 && hi - lo <= 0.05 + 1e-12, detail};
}

// ------------------------------------------------------------------ AC7

Outcome ac7_depth_scaling() {
    const auto pd = synthetic(723, 500, {0.04, 0.04, 0.92, 0}, 7);
    const auto train_set = pd.subset(pd.split.train);
    const auto val_set = pd.subset(pd.split.val);
    const std::uint64_t t = train_set.size();
    bool ok = true;
    std::string detail = "T=" + std::to_string(t) + ", N_backward:";
    for (std::size_t d = 1; d <= 6; ++d) {
        model::TrainConfig tc;
        tc.epochs = 1;
        tc.method = ParamShift{};
        const auto r = model::train(model::HybridModel::init(pd.feature_dim, make_spec(4, d), 7),
                                    train_set, val_set, tc);
        const std::uint64_t want = 2 * t * (d + 1) * 4;
        ok = ok && r.total.n_backward == want;
        detail += " d" + std::to_string(d) + "=" + std::to_string(r.total.n_backward);
    }
    return {ok, detail};
}

// ------------------------------------------------------------------ AC8

Outcome ac8_shots() {
    Rng rng(808);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto spec = make_spec(4, 1 + rng.below(6));
        const circuit::EncodedInput in{testing::random_vector(rng, 4, -kPi / 2, kPi / 2),
                                       testing::random_vector(rng, spec.param_count(), -kPi, kPi)};
        const auto exact = circuit::evaluate(spec, in).z;
        const auto est = circuit::evaluate(spec, in, circuit::Shots{1'000'000, 8000u + trial}).z;
        for (std::size_t i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(exact[i] - est[i]));
        }
    }
    return {worst <= 0.005, "max |Z_shots - Z_exact| " + fmt("%.5f", worst) + " (<=0.005)"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 call counts per epoch", ac1_call_counts},
        {"AC2 ten-epoch total calls", ac2_total_calls},
        {"AC3 gradient parity", ac3_gradient_parity},
        {"AC4 simulator correctness", ac4_simulator},
        {"AC5 split table", ac5_split_table},
        {"AC6 training behaviour", ac6_training},
        {"AC7 q_depth scaling", ac7_depth_scaling},
        {"AC8 shot estimation", ac8_shots},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
