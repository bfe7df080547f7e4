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

#include "Generators.hpp"

#include "qcrack/Error.hpp"
#include "qcrack/Gradient.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <thread>

using namespace qcrack;
using namespace qcrack::autodiff;
using circuit::CircuitSpec;
using circuit::EncodedInput;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

CircuitSpec make_spec(std::size_t q, std::size_t depth) {
    CircuitSpec s;
    s.num_qubits = q;
    s.q_depth = depth;
    return s;
}

EncodedInput random_input(Rng &rng, const CircuitSpec &spec) {
    return {testing::random_vector(rng, spec.num_qubits, -kPi / 2, kPi / 2),
            testing::random_vector(rng, spec.param_count(), -kPi, kPi)};
}

double max_abs_diff(const QNodeJacobian &a, const QNodeJacobian &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.d_params.size(); ++i) {
        d = std::max(d, std::abs(a.d_params[i] - b.d_params[i]));
    }
    for (std::size_t i = 0; i < a.d_inputs.size(); ++i) {
        d = std::max(d, std::abs(a.d_inputs[i] - b.d_inputs[i]));
    }
    return d;
}

/// Black-box central differences straight off circuit::evaluate, step h.
QNodeJacobian numeric_jacobian(const CircuitSpec &spec, const EncodedInput &in, double h) {
    const std::size_t q = spec.num_qubits;
    QNodeJacobian j{q, spec.param_count(), q, std::vector<double>(q * spec.param_count()),
                    std::vector<double>(q * q)};
    auto probe = [&](EncodedInput plus, EncodedInput minus, std::vector<double> &dst,
                     std::size_t col, std::size_t cols) {
        const auto zp = circuit::evaluate(spec, plus).z;
        const auto zm = circuit::evaluate(spec, minus).z;
        for (std::size_t o = 0; o < q; ++o) {
            dst[o * cols + col] = (zp[o] - zm[o]) / (2 * h);
        }
    };
    for (std::size_t p = 0; p < spec.param_count(); ++p) {
        auto plus = in, minus = in;
        plus.params[p] += h;
        minus.params[p] -= h;
        probe(plus, minus, j.d_params, p, spec.param_count());
    }
    for (std::size_t i = 0; i < q; ++i) {
        auto plus = in, minus = in;
        plus.angles[i] += h;
        minus.angles[i] -= h;
        probe(plus, minus, j.d_inputs, i, q);
    }
    return j;
}

} // namespace

TEST_CASE("method validation and naming") {
    CHECK_NOTHROW(validate(Backprop{}));
    CHECK_THROWS_AS(validate(FiniteDiff{0.0}), ArgumentError);
    CHECK_THROWS_AS(validate(FiniteDiff{-1e-3}), ArgumentError);
    CHECK_THROWS_AS(validate(ParamShift{0.0, 0.5}), ArgumentError);
    CHECK_THROWS_AS(validate(ParamShift{4.0, 0.5}), ArgumentError);
    CHECK_THROWS_AS(validate(ParamShift{kPi / 2, 0.0}), ArgumentError);
    CHECK_NOTHROW(validate(ParamShift{kPi, 0.5}));
    CHECK(method_name(Backprop{}) == "backprop");
    CHECK(method_name(FiniteDiff{}) == "finite-diff");
    CHECK(method_name(ParamShift{}) == "param-shift");

    const FiniteDiff fd = std::get<FiniteDiff>(GradMethod{FiniteDiff{}});
    CHECK(fd.step == 1e-4);
    CHECK(fd.variant == FdVariant::Forward);
    const ParamShift ps{};
    CHECK(ps.shift == kPi / 2);
    CHECK(ps.coeff == 0.5);
}

TEST_CASE("method JSON round trip") {
    for (const GradMethod m :
         {GradMethod{Backprop{}}, GradMethod{FiniteDiff{1e-3, FdVariant::Central}},
          GradMethod{FiniteDiff{}}, GradMethod{ParamShift{}}}) {
        CHECK(to_json(method_from_json(to_json(m))) == to_json(m));
    }
    CHECK_THROWS_AS(method_from_json({{"kind", "spsa"}}), FormatError);
    CHECK_THROWS_AS(method_from_json({{"kind", "backprop"}, {"step", 1}}), FormatError);
    CHECK_THROWS_AS(method_from_json({{"kind", "finite-diff"}, {"variant", "sideways"}}),
                    FormatError);
    CHECK_THROWS_AS(method_from_json({{"kind", "finite-diff"}, {"step", -1}}), FormatError);
}

TEST_CASE("single-qubit derivative at a=0.2, t=0.3") {
    const auto spec = make_spec(1, 1);
    const EncodedInput in{{0.2}, {0.3}};
    // -cos(0.5), evaluated independently and frozen.
    const double want = -0.8775825618903728;
    CallLedger ledger;
    const auto ps = jacobian(spec, in, ParamShift{}, ledger);
    CHECK(ps.dparam(0, 0) == Approx(want).epsilon(1e-14));
    CHECK(ps.dinput(0, 0) == Approx(want).epsilon(1e-14));
    const auto bp = jacobian(spec, in, Backprop{}, ledger);
    CHECK(bp.dparam(0, 0) == Approx(want).epsilon(1e-14));
    const auto fd = jacobian(spec, in, FiniteDiff{1e-3, FdVariant::Central}, ledger);
    CHECK(std::abs(fd.dparam(0, 0) - want) <= 1e-6);
    const auto fwd = jacobian(spec, in, FiniteDiff{}, ledger);
    CHECK(std::abs(fwd.dparam(0, 0) - want) <= 1e-3);
}

TEST_CASE("all methods vanish at a stationary point") {
    const auto spec = make_spec(1, 1);
    const double a = 0.4;
    const EncodedInput in{{a}, {-kPi / 2 - a}};
    CallLedger ledger;
    for (const GradMethod m : {GradMethod{Backprop{}}, GradMethod{ParamShift{}},
                               GradMethod{FiniteDiff{1e-3, FdVariant::Central}}}) {
        CHECK(std::abs(jacobian(spec, in, m, ledger).dparam(0, 0)) <= 1e-6);
    }
}

TEST_CASE("property: gradient parity across methods") {
    Rng rng(1234);
    double ps_dev = 0.0, central_dev = 0.0, forward_dev = 0.0, oracle_dev = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto spec = make_spec(1 + rng.below(4), 1 + rng.below(6));
        const auto in = random_input(rng, spec);
        CallLedger ledger;
        const auto bp = jacobian(spec, in, Backprop{}, ledger);
        ps_dev = std::max(ps_dev, max_abs_diff(jacobian(spec, in, ParamShift{}, ledger), bp));
        central_dev = std::max(
            central_dev,
            max_abs_diff(jacobian(spec, in, FiniteDiff{1e-3, FdVariant::Central}, ledger), bp));
        forward_dev =
            std::max(forward_dev, max_abs_diff(jacobian(spec, in, FiniteDiff{}, ledger), bp));
        oracle_dev = std::max(oracle_dev, max_abs_diff(numeric_jacobian(spec, in, 1e-5), bp));
    }
    CHECK(ps_dev <= 1e-10);
    CHECK(central_dev <= 1e-5);
    CHECK(forward_dev <= 1e-3);
    CHECK(oracle_dev <= 1e-8);
}

TEST_CASE("property: parameter shift does not depend on the finite-difference step") {
    Rng rng(77);
    const auto spec = make_spec(3, 2);
    const auto in = random_input(rng, spec);
    CallLedger ledger;
    const auto ps = jacobian(spec, in, ParamShift{}, ledger);
    const auto bp = jacobian(spec, in, Backprop{}, ledger);
    const auto coarse = jacobian(spec, in, FiniteDiff{1e-2, FdVariant::Central}, ledger);
    const auto fine = jacobian(spec, in, FiniteDiff{1e-4, FdVariant::Central}, ledger);
    CHECK(max_abs_diff(ps, bp) <= 1e-12);
    CHECK(max_abs_diff(coarse, fine) > 1e-7);
    CHECK(max_abs_diff(fine, bp) < max_abs_diff(coarse, bp));
}

TEST_CASE("jacobian charges the ledger per method") {
    const auto spec = make_spec(4, 1);
    Rng rng(5);
    const auto in = random_input(rng, spec);
    const std::uint64_t lq = spec.shiftable_count();

    CallLedger bp;
    (void)jacobian(spec, in, Backprop{}, bp);
    CHECK(bp.counts() == LedgerCounts{1, 0});

    CallLedger ps;
    (void)jacobian(spec, in, ParamShift{}, ps);
    CHECK(ps.counts() == LedgerCounts{0, 2 * lq});

    CallLedger fwd;
    (void)jacobian(spec, in, FiniteDiff{}, fwd);
    CHECK(fwd.counts() == LedgerCounts{0, lq});

    CallLedger central;
    (void)jacobian(spec, in, FiniteDiff{1e-3, FdVariant::Central}, central);
    CHECK(central.counts() == LedgerCounts{0, 2 * lq});

    for (const GradMethod m : {GradMethod{Backprop{}}, GradMethod{FiniteDiff{}},
                               GradMethod{ParamShift{}}}) {
        CallLedger l;
        const auto vj = value_and_jacobian(spec, in, m, l);
        CHECK(l.counts().n_forward == 1);
        CHECK(l.counts().n_backward == backward_calls_per_image(2, 4, m));
        CHECK(vj.value.z == circuit::evaluate(spec, in).z);
    }
    CallLedger f;
    (void)forward(spec, in, f);
    CHECK(f.counts() == LedgerCounts{1, 0});
}

TEST_CASE("jacobian shapes and the QNodeInput overload") {
    const auto spec = make_spec(3, 2);
    Rng rng(6);
    const circuit::QNodeInput raw{testing::random_vector(rng, 3, -1, 1),
                                  testing::random_vector(rng, 6, -1, 1)};
    CallLedger ledger;
    const auto j = jacobian(spec, raw, Backprop{}, ledger);
    CHECK(j.outputs == 3);
    CHECK(j.params == 6);
    CHECK(j.inputs == 3);
    CHECK(j.d_params.size() == 18);
    CHECK(j.d_inputs.size() == 9);
    for (double v : j.d_params) {
        CHECK(std::isfinite(v));
    }
}

TEST_CASE("backprop refuses shot mode") {
    const auto spec = make_spec(2, 1);
    CallLedger ledger;
    CHECK_THROWS_AS(jacobian(spec, EncodedInput{{0, 0}, {0, 0}}, Backprop{}, ledger,
                             circuit::Shots{100, 1}),
                    CapabilityError);
    CHECK_THROWS_AS(jacobian(spec, EncodedInput{{0, 0}, {0, 0}}, FiniteDiff{0.0}, ledger),
                    ArgumentError);
}

TEST_CASE("parameter shift under shots approaches the exact gradient") {
    const auto spec = make_spec(2, 1);
    Rng rng(8);
    const auto in = random_input(rng, spec);
    CallLedger ledger;
    const auto exact = jacobian(spec, in, ParamShift{}, ledger);
    const auto noisy = jacobian(spec, in, ParamShift{}, ledger, circuit::Shots{200'000, 3});
    CHECK(max_abs_diff(exact, noisy) <= 0.02);
    const auto again = jacobian(spec, in, ParamShift{}, ledger, circuit::Shots{200'000, 3});
    CHECK(max_abs_diff(noisy, again) == 0.0);
}

TEST_CASE("ledger_predict matches the per-epoch call formulas") {
    CHECK(ledger_predict(856, 184, 2, 4, Backprop{}).n_calls() == 1040);
    CHECK(ledger_predict(856, 184, 2, 4, FiniteDiff{}).n_calls() == 7888);
    CHECK(ledger_predict(856, 184, 2, 4, ParamShift{}).n_calls() == 14736);
    CHECK(ledger_predict(49, 49, 2, 4, ParamShift{}).n_calls() * 10 == 8820);
    CHECK(ledger_predict(856, 184, 2, 4, FiniteDiff{1e-3, FdVariant::Central}).n_calls() ==
          14736);
    CHECK(ledger_predict(0, 0, 2, 4, ParamShift{}).n_calls() == 0);
}

TEST_CASE("ledger_reconcile") {
    CallLedger ok(LedgerContext{856, 184, 2, 4});
    ok.add_forward(1040);
    const auto report = ledger_reconcile(ok, Backprop{});
    CHECK(report.ok);
    CHECK(report.measured.n_calls() == 1040);

    CallLedger empty(LedgerContext{0, 0, 2, 4});
    CHECK(ledger_reconcile(empty, ParamShift{}).ok);

    // One training image skipped: missing 1 forward and 2*L*Q backward calls.
    CallLedger skipped(LedgerContext{10, 3, 2, 4});
    skipped.add_forward(12);
    skipped.add_backward(9 * 16);
    try {
        (void)ledger_reconcile(skipped, ParamShift{});
        FAIL("expected a mismatch");
    } catch (const ReconciliationError &e) {
        const std::string msg = e.what();
        CHECK(msg.find("total -17") != std::string::npos);
        CHECK(msg.find("backward -16") != std::string::npos);
        CHECK(msg.find("forward -1") != std::string::npos);
    }
}

TEST_CASE("property: ledger exactness over a parameter sweep") {
    Rng rng(9);
    for (std::uint64_t t : {1, 5, 20}) {
        for (std::uint64_t v : {1, 5, 20}) {
            for (std::size_t layers = 2; layers <= 7; ++layers) {
                for (std::size_t q = 1; q <= 4; ++q) {
                    const auto spec = make_spec(q, layers - 1);
                    for (const GradMethod m : {GradMethod{Backprop{}}, GradMethod{FiniteDiff{}},
                                               GradMethod{ParamShift{}}}) {
                        CallLedger ledger(LedgerContext{t, v, layers, q});
                        const auto in = random_input(rng, spec);
                        for (std::uint64_t i = 0; i < t; ++i) {
                            (void)value_and_jacobian(spec, in, m, ledger);
                        }
                        for (std::uint64_t i = 0; i < v; ++i) {
                            (void)forward(spec, in, ledger);
                        }
                        const auto r = ledger_reconcile(ledger, m);
                        CHECK(r.ok);
                    }
                }
            }
        }
    }
}

TEST_CASE("property: backward calls are affine in q_depth") {
    for (std::uint64_t t : {1, 7, 49}) {
        for (std::uint64_t q = 1; q <= 4; ++q) {
            for (std::uint64_t d = 1; d < 6; ++d) {
                const auto ps0 = ledger_predict(t, 3, d + 1, q, ParamShift{}).n_backward;
                const auto ps1 = ledger_predict(t, 3, d + 2, q, ParamShift{}).n_backward;
                CHECK(ps1 - ps0 == 2 * t * q);
                const auto fd0 = ledger_predict(t, 3, d + 1, q, FiniteDiff{}).n_backward;
                const auto fd1 = ledger_predict(t, 3, d + 2, q, FiniteDiff{}).n_backward;
                CHECK(fd1 - fd0 == t * q);
            }
        }
    }
}

TEST_CASE("ledger counts are exact under concurrent increments") {
    CallLedger ledger;
    std::vector<std::jthread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&] {
            for (int i = 0; i < 10000; ++i) {
                ledger.add_forward();
                ledger.add_backward(2);
            }
        });
    }
    threads.clear();
    CHECK(ledger.counts() == LedgerCounts{80000, 160000});
    CHECK(ledger.n_calls() == 240000);
}

TEST_CASE("ledger epoch JSON") {
    const auto j = ledger_epoch_json(3, ParamShift{}, LedgerCounts{98, 784}, 882);
    CHECK(j == nlohmann::json{{"epoch", 3},
                              {"method", "param-shift"},
                              {"n_forward", 98},
                              {"n_backward", 784},
                              {"n_calls", 882},
                              {"predicted", 882}});
}
