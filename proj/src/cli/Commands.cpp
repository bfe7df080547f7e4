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

#include "qcrack/cli/Cli.hpp"

#include "qcrack/Checkpoint.hpp"
#include "qcrack/Dataset.hpp"
#include "qcrack/Error.hpp"
#include "qcrack/Features.hpp"
#include "qcrack/Rng.hpp"
#include "qcrack/Synthetic.hpp"
#include "qcrack/Trainer.hpp"
#include "qcrack/cli/Estimate.hpp"
#include "qcrack/cli/RunConfig.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#ifndef QCRACK_DATA_DIR
#define QCRACK_DATA_DIR "data"
#endif

namespace qcrack::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Raised for anything that should exit with kExitUsage.
class UsageError : public Error {
  public:
    using Error::Error;
};

// Seed stream for test-set shot sampling, shared by train and eval so both
// report identical numbers.
constexpr std::uint64_t kTestStream = 0x7E57;

bool use_color(const std::ostream &out) {
    return &out == &std::cout && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
}

std::string verdict(bool pass, bool color) {
    if (!color) {
        return pass ? "PASS" : "FAIL";
    }
    return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

std::string fmt(const char *format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

json read_json_file(const fs::path &path) {
    const auto text = data::read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw UsageError(path.string() + ": " + e.what());
    }
}

void write_json(const fs::path &path, const json &j) {
    data::write_file_atomic(path, j.dump(2) + "\n");
}

circuit::EvalMode test_mode(const RunConfig &cfg) {
    if (cfg.shots == 0) {
        return circuit::Exact{};
    }
    return circuit::Shots{cfg.shots, derive_seed(cfg.seed, kTestStream)};
}

void print_test_report(std::ostream &out, const model::TestReport &r) {
    const auto &cm = r.confusion;
    out << "test loss " << fmt("%.6f", r.loss) << ", accuracy " << fmt("%.4f", r.accuracy)
        << "\n"
        << "confusion (rows actual crack/no_crack, cols predicted crack/no_crack):\n"
        << "  " << cm.tp << " " << cm.fn << "\n"
        << "  " << cm.fp << " " << cm.tn << "\n";
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::size_t n_crack{0};
    std::size_t n_clean{0};
    std::uint64_t seed{0};
    std::string out;
};

int cmd_gen(const GenArgs &a, std::ostream &out) {
    const auto patches = data::generate_synthetic(a.n_crack, a.n_clean, a.seed);
    data::write_dataset(a.out, patches);
    out << "wrote " << patches.size() << " patches and manifest.csv to " << a.out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- train

struct TrainArgs {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::size_t> epochs;
    std::optional<std::string> method;
    std::optional<std::uint64_t> shots;
    std::optional<std::size_t> depth;
    bool json{false};
};

RunConfig resolve_config(const TrainArgs &a) {
    json doc = a.config.empty() ? json::object() : read_json_file(a.config);
    try {
        RunConfig cfg = parse_run_config(doc);
        json merged = to_json(cfg);
        if (a.seed) {
            merged["seed"] = *a.seed;
        }
        if (a.out) {
            merged["out"] = *a.out;
        }
        if (a.epochs) {
            merged["epochs"] = *a.epochs;
        }
        if (a.method) {
            merged["method"] = json{{"kind", *a.method}};
        }
        if (a.shots) {
            merged["shots"] = *a.shots;
        }
        if (a.depth) {
            merged["circuit"]["q_depth"] = *a.depth;
        }
        return parse_run_config(merged);
    } catch (const FormatError &e) {
        throw UsageError(e.what());
    }
}

int cmd_train(const TrainArgs &a, std::ostream &out) {
    const RunConfig cfg = resolve_config(a);
    const auto wall_start = std::chrono::steady_clock::now();

    const PreparedData pd = prepare_data(cfg);
    if (pd.examples.empty()) {
        throw ArgumentError("dataset is empty");
    }
    const auto train_set = pd.subset(pd.split.train);
    const auto val_set = pd.subset(pd.split.val);
    const auto test_set = pd.subset(pd.split.test);

    auto initial = model::HybridModel::init(pd.feature_dim, cfg.circuit, cfg.seed);
    model::TrainConfig tc;
    tc.epochs = cfg.epochs;
    tc.method = cfg.method;
    tc.seed = cfg.seed;
    tc.shots = cfg.shots;
    tc.batch_size = cfg.batch_size;
    tc.timing = cfg.timing;

    if (!a.json) {
        out << "train: " << autodiff::method_name(cfg.method) << ", T=" << train_set.size()
            << " V=" << val_set.size() << " test=" << test_set.size() << ", L="
            << cfg.circuit.layer_count() << " Q=" << cfg.circuit.num_qubits << ", "
            << cfg.epochs << " epochs\n";
    }
    const auto result = model::train(std::move(initial), train_set, val_set, tc,
                                     [&](const model::EpochMetrics &m) {
                                         if (!a.json) {
                                             out << "  epoch " << m.epoch << ": train_loss "
                                                 << fmt("%.4f", m.train_loss) << " val_acc "
                                                 << fmt("%.4f", m.val_acc) << " n_calls "
                                                 << m.calls.n_calls() << "\n";
                                         }
                                     });

    std::optional<model::TestReport> test;
    autodiff::CallLedger test_ledger;
    if (!test_set.empty()) {
        test = model::evaluate_test(result.model, test_set, test_mode(cfg), &test_ledger);
    }
    const double wall_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();

    const json cfg_json = to_json(cfg);
    std::error_code ec;
    fs::create_directories(cfg.out, ec);
    if (ec) {
        throw IoError("cannot create '" + cfg.out.string() + "': " + ec.message());
    }
    write_json(cfg.out / "config.json", cfg_json);
    data::write_file_atomic(cfg.out / "metrics.csv", model::metrics_csv(result.epochs));

    json ledger = json::array();
    for (const auto &m : result.epochs) {
        ledger.push_back(
            autodiff::ledger_epoch_json(m.epoch, cfg.method, m.calls, m.predicted_calls));
    }
    write_json(cfg.out / "ledger.json", {{"config", cfg_json}, {"epochs", ledger}});
    write_json(cfg.out / "split.json",
               {{"config", cfg_json},
                {"split", data::split_record(pd.ids(), pd.split, cfg.resolved_split())}});

    model::Checkpoint ck{result.model, result.optimizer, cfg.seed, cfg_json};
    write_json(cfg.out / "checkpoint.json", model::to_json(ck));

    const auto predicted = autodiff::ledger_predict(train_set.size(), val_set.size(),
                                                    cfg.circuit.layer_count(),
                                                    cfg.circuit.num_qubits, cfg.method);
    json report = {{"config", cfg_json},
                   {"method", autodiff::method_name(cfg.method)},
                   {"epochs", result.epochs.size()},
                   {"sizes",
                    {{"train", train_set.size()}, {"val", val_set.size()},
                     {"test", test_set.size()}}},
                   {"n_forward", result.total.n_forward},
                   {"n_backward", result.total.n_backward},
                   {"n_calls", result.total.n_calls()},
                   {"predicted_calls_per_epoch", predicted.n_calls()},
                   {"test_calls", test_ledger.n_calls()},
                   {"wall_time_s", wall_s},
                   {"test", test ? model::to_json(*test) : json()}};
    if (test) {
        report["test_loss"] = test->loss;
        report["test_accuracy"] = test->accuracy;
    }
    write_json(cfg.out / "report.json", report);

    if (a.json) {
        out << report.dump(2) << "\n";
    } else {
        if (test) {
            print_test_report(out, *test);
        }
        out << "total calls " << result.total.n_calls() << " (forward "
            << result.total.n_forward << ", backward " << result.total.n_backward << ")\n"
            << "artifacts in " << cfg.out.string() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
    std::string checkpoint;
    std::string config;
    std::string features;
    std::string split{"test"};
    std::optional<std::string> out;
    bool json{false};
};

int cmd_eval(const EvalArgs &a, std::ostream &out) {
    model::Checkpoint ck;
    try {
        ck = model::checkpoint_from_json(read_json_file(a.checkpoint));
    } catch (const FormatError &e) {
        throw UsageError(e.what());
    }

    std::vector<model::Example> examples;
    RunConfig cfg;
    bool have_cfg = false;
    if (!a.config.empty() || (!ck.config.is_null() && a.features.empty())) {
        try {
            cfg = parse_run_config(a.config.empty() ? ck.config : read_json_file(a.config));
        } catch (const FormatError &e) {
            throw UsageError(e.what());
        }
        have_cfg = true;
    }
    if (!a.features.empty()) {
        auto imported = data::import_features(a.features);
        for (std::size_t i = 0; i < imported.ids.size(); ++i) {
            examples.push_back({imported.ids[i], std::move(imported.features[i].values),
                                static_cast<int>(imported.labels[i])});
        }
    } else if (have_cfg) {
        const auto pd = prepare_data(cfg);
        if (a.split == "test") {
            examples = pd.subset(pd.split.test);
        } else if (a.split == "val") {
            examples = pd.subset(pd.split.val);
        } else if (a.split == "train") {
            examples = pd.subset(pd.split.train);
        } else {
            examples = pd.examples;
        }
    } else {
        throw UsageError("eval needs --features, --config, or a checkpoint with an embedded config");
    }
    if (examples.empty()) {
        throw ArgumentError("no samples to evaluate");
    }
    if (examples.front().features.size() != ck.model.feature_dim()) {
        throw UsageError("feature width " + std::to_string(examples.front().features.size()) +
                         " does not match checkpoint input width " +
                         std::to_string(ck.model.feature_dim()));
    }

    const circuit::EvalMode mode = have_cfg && a.features.empty() ? test_mode(cfg)
                                                                  : circuit::EvalMode{circuit::Exact{}};
    const auto report = model::evaluate_test(ck.model, examples, mode);
    json doc = model::to_json(report);
    doc["checkpoint"] = a.checkpoint;
    doc["samples"] = examples.size();
    doc["source"] = a.features.empty() ? "split:" + a.split : "features:" + a.features;
    if (have_cfg) {
        doc["config"] = to_json(cfg);
    }
    const fs::path out_dir = a.out ? fs::path(*a.out) : fs::path(a.checkpoint).parent_path();
    if (!out_dir.empty()) {
        std::error_code ec;
        fs::create_directories(out_dir, ec);
    }
    write_json(out_dir / "eval_report.json", doc);

    if (a.json) {
        out << doc.dump(2) << "\n";
    } else {
        print_test_report(out, report);
        out << "misclassified: " << report.misclassified.size() << "\n";
        for (const auto &id : report.misclassified) {
            out << "  " << id << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- gradcheck

struct GradcheckArgs {
    std::size_t qubits{4};
    std::size_t depth{1};
    std::size_t trials{100};
    std::uint64_t seed{0};
    double delta{1e-3};
    std::string variant{"central"};
    std::optional<double> tolerance;
    double ps_tolerance{1e-10};
    bool sweep{false};
    bool json{false};
};

double max_deviation(const autodiff::QNodeJacobian &a, const autodiff::QNodeJacobian &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.d_params.size(); ++i) {
        d = std::max(d, std::abs(a.d_params[i] - b.d_params[i]));
    }
    for (std::size_t i = 0; i < a.d_inputs.size(); ++i) {
        d = std::max(d, std::abs(a.d_inputs[i] - b.d_inputs[i]));
    }
    return d;
}

int cmd_gradcheck(const GradcheckArgs &a, std::ostream &out) {
    autodiff::FiniteDiff fd;
    fd.step = a.delta;
    if (a.variant == "central") {
        fd.variant = autodiff::FdVariant::Central;
    } else if (a.variant == "forward") {
        fd.variant = autodiff::FdVariant::Forward;
    } else {
        throw UsageError("--variant must be central or forward");
    }
    try {
        autodiff::validate(fd);
    } catch (const ArgumentError &e) {
        throw UsageError(e.what());
    }
    const double fd_tol =
        a.tolerance.value_or(fd.variant == autodiff::FdVariant::Central ? 1e-5 : 1e-3);

    std::vector<std::size_t> depths;
    for (std::size_t d = a.sweep ? 1 : a.depth; d <= a.depth; ++d) {
        depths.push_back(d);
    }
    double ps_dev = 0.0;
    double fd_dev = 0.0;
    Rng rng(a.seed);
    for (std::size_t depth : depths) {
        circuit::CircuitSpec spec;
        spec.num_qubits = a.qubits;
        spec.q_depth = depth;
        try {
            spec.validate();
        } catch (const Error &e) {
            throw UsageError(e.what());
        }
        for (std::size_t t = 0; t < a.trials; ++t) {
            circuit::EncodedInput input;
            for (std::size_t i = 0; i < spec.num_qubits; ++i) {
                input.angles.push_back(rng.uniform(-std::numbers::pi, std::numbers::pi));
            }
            for (std::size_t i = 0; i < spec.param_count(); ++i) {
                input.params.push_back(rng.uniform(-std::numbers::pi, std::numbers::pi));
            }
            autodiff::CallLedger ledger;
            const auto bp = autodiff::jacobian(spec, input, autodiff::Backprop{}, ledger);
            const auto ps = autodiff::jacobian(spec, input, autodiff::ParamShift{}, ledger);
            const auto fdj = autodiff::jacobian(spec, input, fd, ledger);
            ps_dev = std::max(ps_dev, max_deviation(ps, bp));
            fd_dev = std::max(fd_dev, max_deviation(fdj, bp));
        }
    }
    const bool ps_ok = ps_dev <= a.ps_tolerance;
    const bool fd_ok = fd_dev <= fd_tol;
    const std::string fd_label = "finite-diff " + a.variant + " (step " + fmt("%g", a.delta) + ")";

    if (a.json) {
        json doc = {{"qubits", a.qubits},
                    {"depths", depths},
                    {"trials", a.trials},
                    {"seed", a.seed},
                    {"results",
                     {{{"method", "param-shift"},
                       {"max_deviation", ps_dev},
                       {"tolerance", a.ps_tolerance},
                       {"pass", ps_ok}},
                      {{"method", "finite-diff"},
                       {"variant", a.variant},
                       {"step", a.delta},
                       {"max_deviation", fd_dev},
                       {"tolerance", fd_tol},
                       {"pass", fd_ok}}}},
                    {"pass", ps_ok && fd_ok}};
        out << doc.dump(2) << "\n";
    } else {
        const bool color = use_color(out);
        char line[160];
        out << "gradcheck: Q=" << a.qubits << " q_depth="
            << (a.sweep ? "1.." + std::to_string(a.depth) : std::to_string(a.depth))
            << " trials=" << a.trials << " seed=" << a.seed << " (reference: backprop)\n";
        std::snprintf(line, sizeof line, "%-36s %-20s %-10s %s\n", "method", "max |d - backprop|",
                      "tolerance", "result");
        out << line;
        std::snprintf(line, sizeof line, "%-36s %-20.3e %-10.1e ", "param-shift (s=pi/2, c=1/2)",
                      ps_dev, a.ps_tolerance);
        out << line << verdict(ps_ok, color) << "\n";
        std::snprintf(line, sizeof line, "%-36s %-20.3e %-10.1e ", fd_label.c_str(), fd_dev,
                      fd_tol);
        out << line << verdict(fd_ok, color) << "\n";
    }
    return ps_ok && fd_ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- ledger

struct LedgerArgs {
    std::uint64_t train{0};
    std::uint64_t val{0};
    std::uint64_t layers{0};
    std::uint64_t qubits{0};
    bool json{false};
};

int cmd_ledger(const LedgerArgs &a, std::ostream &out) {
    const std::vector<std::pair<std::string, autodiff::GradMethod>> methods = {
        {"backprop", autodiff::Backprop{}},
        {"finite-diff", autodiff::FiniteDiff{}},
        {"param-shift", autodiff::ParamShift{}}};
    if (a.json) {
        json rows = json::object();
        for (const auto &[name, m] : methods) {
            const auto p = autodiff::ledger_predict(a.train, a.val, a.layers, a.qubits, m);
            rows[name] = {{"n_forward", p.n_forward},
                          {"n_backward", p.n_backward},
                          {"n_calls", p.n_calls()}};
        }
        out << json{{"T", a.train}, {"V", a.val}, {"L", a.layers}, {"Q", a.qubits},
                    {"methods", rows}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "calls per epoch for T=" << a.train << " V=" << a.val << " L=" << a.layers
        << " Q=" << a.qubits << "\n";
    char line[128];
    std::snprintf(line, sizeof line, "%-12s %12s %12s %12s\n", "method", "forward", "backward",
                  "total");
    out << line;
    for (const auto &[name, m] : methods) {
        const auto p = autodiff::ledger_predict(a.train, a.val, a.layers, a.qubits, m);
        std::snprintf(line, sizeof line, "%-12s %12llu %12llu %12llu\n", name.c_str(),
                      static_cast<unsigned long long>(p.n_forward),
                      static_cast<unsigned long long>(p.n_backward),
                      static_cast<unsigned long long>(p.n_calls()));
        out << line;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
    std::string profile;
    std::string profile_file;
    std::string profiles_dir{QCRACK_DATA_DIR "/backends"};
    std::optional<std::uint64_t> clops;
    std::optional<double> overhead;
    std::uint64_t calls{0};
    std::uint64_t shots{1000};
    std::uint64_t layers{2};
    bool json{false};
};

int cmd_estimate(const EstimateArgs &a, std::ostream &out) {
    BackendProfile profile;
    try {
        if (!a.profile_file.empty()) {
            profile = profile_from_json(read_json_file(a.profile_file));
        } else if (!a.profile.empty()) {
            profile = find_profile(a.profiles_dir, a.profile);
        } else if (a.clops) {
            profile.name = "custom";
            profile.clops = *a.clops;
        } else {
            throw UsageError("estimate needs --profile, --profile-file, or --clops");
        }
        if (a.clops) {
            profile.clops = *a.clops;
        }
        if (a.overhead) {
            profile.overhead_factor = *a.overhead;
        }
        profile = profile_from_json(to_json(profile));
    } catch (const FormatError &e) {
        throw UsageError(e.what());
    } catch (const IoError &e) {
        throw UsageError(e.what());
    }
    if (a.calls == 0 || a.shots == 0 || a.layers == 0) {
        throw UsageError("--calls, --shots, and --layers must be positive");
    }
    const auto est = estimate_runtime(profile, a.calls, a.shots, a.layers);
    if (a.json) {
        out << json{{"profile", to_json(profile)},
                    {"n_calls", a.calls},
                    {"shots", a.shots},
                    {"layers", a.layers},
                    {"device_seconds", est.device_seconds},
                    {"wall_seconds", est.wall_seconds}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "backend " << profile.name << " (clops " << profile.clops << ", qv " << profile.qv
        << ", overhead " << profile.overhead_factor << ")\n"
        << "device_seconds = n_calls * shots * layers / clops = " << a.calls << " * " << a.shots
        << " * " << a.layers << " / " << profile.clops << " = "
        << fmt("%.2f", est.device_seconds) << "\n"
        << "wall_seconds = device_seconds * overhead_factor = "
        << fmt("%.2f", est.wall_seconds) << " (" << fmt("%.2f", est.wall_seconds / 3600.0)
        << " h)\n"
        << "order-of-magnitude model; queueing is folded into overhead_factor\n";
    return kExitOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qcrack: hybrid quantum-classical crack patch classifier"};
    app.require_subcommand(1);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Write synthetic PGM patches and a manifest");
    gen_cmd->add_option("--crack", gen.n_crack, "Number of crack patches")->required();
    gen_cmd->add_option("--clean", gen.n_clean, "Number of clean patches")->required();
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    gen_cmd->add_option("--out", gen.out, "Output directory")->required();

    TrainArgs tr;
    auto *train_cmd = app.add_subcommand("train", "Train the hybrid classifier");
    train_cmd->add_option("--config", tr.config, "Run configuration JSON");
    train_cmd->add_option("--seed", tr.seed, "Override config seed");
    train_cmd->add_option("--out", tr.out, "Override output directory");
    train_cmd->add_option("--epochs", tr.epochs, "Override epoch count");
    train_cmd->add_option("--method", tr.method, "backprop | finite-diff | param-shift");
    train_cmd->add_option("--shots", tr.shots, "Shots per circuit (0 = exact)");
    train_cmd->add_option("--depth", tr.depth, "Override q_depth");
    train_cmd->add_flag("--json", tr.json, "Print the report as JSON");

    EvalArgs ev;
    auto *eval_cmd = app.add_subcommand("eval", "Evaluate a checkpoint");
    eval_cmd->add_option("--checkpoint", ev.checkpoint, "checkpoint.json")->required();
    eval_cmd->add_option("--config", ev.config, "Run configuration (default: embedded)");
    eval_cmd->add_option("--features", ev.features, "Evaluate on an imported feature CSV");
    eval_cmd->add_option("--split", ev.split, "test | val | train | all")
        ->check(CLI::IsMember({"test", "val", "train", "all"}));
    eval_cmd->add_option("--out", ev.out, "Directory for eval_report.json");
    eval_cmd->add_flag("--json", ev.json, "Print the report as JSON");

    GradcheckArgs gc;
    auto *gc_cmd = app.add_subcommand("gradcheck", "Compare gradient methods against backprop");
    gc_cmd->add_option("--qubits", gc.qubits, "Qubit count");
    gc_cmd->add_option("--depth", gc.depth, "q_depth");
    gc_cmd->add_option("--trials", gc.trials, "Random circuits per depth");
    gc_cmd->add_option("--seed", gc.seed, "Seed for random angles");
    gc_cmd->add_option("--delta", gc.delta, "Finite-difference step");
    gc_cmd->add_option("--variant", gc.variant, "central | forward");
    gc_cmd->add_option("--tolerance", gc.tolerance, "Finite-difference tolerance");
    gc_cmd->add_option("--ps-tolerance", gc.ps_tolerance, "Parameter-shift tolerance");
    gc_cmd->add_flag("--sweep", gc.sweep, "Check every q_depth from 1 to --depth");
    gc_cmd->add_flag("--json", gc.json, "Machine-readable output");

    LedgerArgs lg;
    auto *lg_cmd = app.add_subcommand("ledger", "Predicted circuit calls per epoch");
    lg_cmd->add_option("T", lg.train, "Training images")->required();
    lg_cmd->add_option("V", lg.val, "Validation images")->required();
    lg_cmd->add_option("L", lg.layers, "Layers (q_depth + 1)")->required();
    lg_cmd->add_option("Q", lg.qubits, "Qubits")->required();
    lg_cmd->add_flag("--json", lg.json, "Machine-readable output");

    EstimateArgs es;
    auto *es_cmd = app.add_subcommand("estimate", "Estimate device time from backend figures");
    es_cmd->add_option("--profile", es.profile, "Backend profile name (e.g. kolkata)");
    es_cmd->add_option("--profile-file", es.profile_file, "Backend profile JSON");
    es_cmd->add_option("--profiles-dir", es.profiles_dir, "Directory of profile JSON files");
    es_cmd->add_option("--clops", es.clops, "Circuit layer operations per second");
    es_cmd->add_option("--overhead", es.overhead, "Queue/transpile multiplier (>= 1)");
    es_cmd->add_option("--calls", es.calls, "Circuit executions")->required();
    es_cmd->add_option("--shots", es.shots, "Shots per execution");
    es_cmd->add_option("--layers", es.layers, "Circuit layers");
    es_cmd->add_flag("--json", es.json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) {
            return cmd_gen(gen, out);
        }
        if (*train_cmd) {
            return cmd_train(tr, out);
        }
        if (*eval_cmd) {
            return cmd_eval(ev, out);
        }
        if (*gc_cmd) {
            return cmd_gradcheck(gc, out);
        }
        if (*lg_cmd) {
            return cmd_ledger(lg, out);
        }
        if (*es_cmd) {
            return cmd_estimate(es, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace qcrack::cli
