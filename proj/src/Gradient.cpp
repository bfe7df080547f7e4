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

#include "qcrack/Gradient.hpp"

#include "qcrack/Error.hpp"
#include "qcrack/Parallel.hpp"
#include "qcrack/Rng.hpp"
#include "qcrack/StateVector.hpp"

#include <cmath>
#include <sstream>

namespace qcrack::autodiff {

using circuit::CircuitSpec;
using circuit::EncodedInput;
using circuit::EvalMode;
using circuit::QNodeOutput;

void validate(const GradMethod &method) {
    if (const auto *fd = std::get_if<FiniteDiff>(&method)) {
        if (!(fd->step > 0.0) || !std::isfinite(fd->step)) {
            throw ArgumentError("finite-difference step must be > 0");
        }
    } else if (const auto *ps = std::get_if<ParamShift>(&method)) {
        if (!(ps->shift > 0.0 && ps->shift <= std::numbers::pi)) {
            throw ArgumentError("parameter shift must lie in (0, pi]");
        }
        if (!(ps->coeff > 0.0) || !std::isfinite(ps->coeff)) {
            throw ArgumentError("parameter-shift coefficient must be > 0");
        }
    }
}

std::string method_name(const GradMethod &method) {
    switch (method.index()) {
    case 0:
        return "backprop";
    case 1:
        return "finite-diff";
    default:
        return "param-shift";
    }
}

nlohmann::json to_json(const GradMethod &method) {
    nlohmann::json j = {{"kind", method_name(method)}};
    if (const auto *fd = std::get_if<FiniteDiff>(&method)) {
        j["step"] = fd->step;
        j["variant"] = fd->variant == FdVariant::Forward ? "forward" : "central";
    } else if (const auto *ps = std::get_if<ParamShift>(&method)) {
        j["shift"] = ps->shift;
        j["coeff"] = ps->coeff;
    }
    return j;
}

GradMethod method_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw FormatError("method must be an object with a string \"kind\"");
    }
    const auto kind = j["kind"].get<std::string>();
    auto number = [&](const char *key, double fallback) {
        if (!j.contains(key)) {
            return fallback;
        }
        if (!j[key].is_number()) {
            throw FormatError(std::string("method.") + key + " must be a number");
        }
        return j[key].get<double>();
    };
    auto reject_unknown = [&](std::initializer_list<const char *> allowed) {
        for (const auto &[key, _] : j.items()) {
            bool known = key == "kind";
            for (const char *a : allowed) {
                known = known || key == a;
            }
            if (!known) {
                throw FormatError("method: unknown key '" + key + "' for kind " + kind);
            }
        }
    };
    GradMethod method;
    if (kind == "backprop") {
        reject_unknown({});
        method = Backprop{};
    } else if (kind == "finite-diff") {
        reject_unknown({"step", "variant"});
        FiniteDiff fd;
        fd.step = number("step", fd.step);
        if (j.contains("variant")) {
            const auto v = j["variant"];
            if (v == "forward") {
                fd.variant = FdVariant::Forward;
            } else if (v == "central") {
                fd.variant = FdVariant::Central;
            } else {
                throw FormatError("method.variant must be \"forward\" or \"central\"");
            }
        }
        method = fd;
    } else if (kind == "param-shift") {
        reject_unknown({"shift", "coeff"});
        ParamShift ps;
        ps.shift = number("shift", ps.shift);
        ps.coeff = number("coeff", ps.coeff);
        method = ps;
    } else {
        throw FormatError("method.kind must be backprop, finite-diff, or param-shift; got '" +
                          kind + "'");
    }
    try {
        validate(method);
    } catch (const ArgumentError &e) {
        throw FormatError(std::string("method: ") + e.what());
    }
    return method;
}

namespace {

double &slot_angle(EncodedInput &input, std::size_t slot) {
    const std::size_t q = input.angles.size();
    return slot < q ? input.angles[slot] : input.params[slot - q];
}

QNodeJacobian empty_jacobian(const CircuitSpec &spec) {
    QNodeJacobian jac;
    jac.outputs = spec.num_qubits;
    jac.params = spec.param_count();
    jac.inputs = spec.num_qubits;
    jac.d_params.assign(jac.outputs * jac.params, 0.0);
    jac.d_inputs.assign(jac.outputs * jac.inputs, 0.0);
    return jac;
}

void store(QNodeJacobian &jac, std::size_t out, std::size_t slot, double value) {
    if (slot < jac.inputs) {
        jac.d_inputs[out * jac.inputs + slot] = value;
    } else {
        jac.d_params[out * jac.params + (slot - jac.inputs)] = value;
    }
}

// Seed for one shifted execution in shot mode. Stream 0 is left to the
// unshifted forward call, which uses the caller's seed directly.
EvalMode shifted_mode(const EvalMode &mode, std::size_t slot, bool minus) {
    if (const auto *shots = std::get_if<circuit::Shots>(&mode)) {
        return circuit::Shots{shots->shots,
                              derive_seed(shots->seed, 1 + 2 * slot + (minus ? 1 : 0))};
    }
    return mode;
}

// Reverse sweep: one forward simulation, then undo gates one by one while
// carrying Z_w|psi> back through the circuit for every output wire w.
ValueAndJacobian reverse_mode(const CircuitSpec &spec, const EncodedInput &input) {
    const circuit::Circuit ops = circuit::build_circuit(spec, input);
    const std::size_t q = spec.num_qubits;
    auto state = sim::StateVector::zero(q);
    for (const auto &op : ops) {
        state.apply(op.gate);
    }

    ValueAndJacobian out;
    out.jacobian = empty_jacobian(spec);
    out.value.z.assign(q, 0.0);

    std::vector<sim::Complex> psi(state.amplitudes().begin(), state.amplitudes().end());
    std::vector<std::vector<sim::Complex>> lambdas(q, psi);
    for (std::size_t w = 0; w < q; ++w) {
        auto &lam = lambdas[w];
        for (std::size_t i = 0; i < lam.size(); ++i) {
            const double p = std::norm(psi[i]);
            if ((i >> w) & 1U) {
                lam[i] = -lam[i];
                out.value.z[w] -= p;
            } else {
                out.value.z[w] += p;
            }
        }
    }

    std::vector<sim::Complex> mu(psi.size());
    for (std::size_t j = ops.size(); j-- > 0;) {
        const auto &op = ops[j];
        const sim::Gate inv = sim::adjoint(op.gate);
        sim::kernels::apply_gate(psi, inv);
        if (op.slot) {
            mu = psi;
            const std::size_t *control = op.gate.control ? &*op.gate.control : nullptr;
            sim::kernels::apply_matrix(mu, op.gate.target, control,
                                       sim::target_matrix_derivative(op.gate));
            if (control) {
                // d/dt of a controlled rotation vanishes where the control is |0⟩.
                const std::size_t cmask = std::size_t{1} << *control;
                for (std::size_t i = 0; i < mu.size(); ++i) {
                    if ((i & cmask) == 0) {
                        mu[i] = 0.0;
                    }
                }
            }
            for (std::size_t w = 0; w < q; ++w) {
                double acc = 0.0;
                const auto &lam = lambdas[w];
                for (std::size_t i = 0; i < mu.size(); ++i) {
                    acc += (std::conj(lam[i]) * mu[i]).real();
                }
                store(out.jacobian, w, *op.slot, 2.0 * acc);
            }
        }
        for (auto &lam : lambdas) {
            sim::kernels::apply_gate(lam, inv);
        }
    }
    return out;
}

QNodeJacobian shift_based(const CircuitSpec &spec, const EncodedInput &input,
                          const GradMethod &method, const EvalMode &mode,
                          const QNodeOutput *base) {
    const std::size_t q = spec.num_qubits;
    const std::size_t slots = spec.shiftable_count();
    QNodeJacobian jac = empty_jacobian(spec);

    double plus_shift = 0.0;
    double minus_shift = 0.0;
    double scale = 1.0;
    bool one_sided = false;
    if (const auto *ps = std::get_if<ParamShift>(&method)) {
        plus_shift = ps->shift;
        minus_shift = ps->shift;
        scale = ps->coeff;
    } else {
        const auto &fd = std::get<FiniteDiff>(method);
        plus_shift = fd.step;
        if (fd.variant == FdVariant::Forward) {
            one_sided = true;
            scale = 1.0 / fd.step;
        } else {
            minus_shift = fd.step;
            scale = 1.0 / (2.0 * fd.step);
        }
    }

    QNodeOutput center;
    if (one_sided) {
        center = base ? *base : circuit::evaluate(spec, input, mode);
    }

    parallel_for(slots, [&](std::size_t slot) {
        EncodedInput shifted = input;
        double &angle = slot_angle(shifted, slot);
        const double original = angle;
        angle = original + plus_shift;
        const auto fp = circuit::evaluate(spec, shifted, shifted_mode(mode, slot, false));
        QNodeOutput fm;
        if (one_sided) {
            fm = center;
        } else {
            angle = original - minus_shift;
            fm = circuit::evaluate(spec, shifted, shifted_mode(mode, slot, true));
        }
        for (std::size_t w = 0; w < q; ++w) {
            store(jac, w, slot, scale * (fp.z[w] - fm.z[w]));
        }
    });
    return jac;
}

} // namespace

std::uint64_t backward_calls_per_image(std::uint64_t layers, std::uint64_t qubits,
                                       const GradMethod &method) {
    if (std::holds_alternative<Backprop>(method)) {
        return 0;
    }
    if (const auto *fd = std::get_if<FiniteDiff>(&method);
        fd && fd->variant == FdVariant::Forward) {
        return layers * qubits;
    }
    return 2 * layers * qubits;
}

QNodeOutput forward(const CircuitSpec &spec, const EncodedInput &input,
                    CallLedger &ledger, const EvalMode &mode) {
    auto out = circuit::evaluate(spec, input, mode);
    ledger.add_forward(1);
    return out;
}

QNodeJacobian jacobian(const CircuitSpec &spec, const EncodedInput &input,
                       const GradMethod &method, CallLedger &ledger,
                       const EvalMode &mode, const QNodeOutput *base) {
    validate(method);
    circuit::check_input(spec, input);
    if (std::holds_alternative<Backprop>(method)) {
        if (std::holds_alternative<circuit::Shots>(mode)) {
            throw CapabilityError(
                "backprop needs the simulated statevector and cannot run in shot mode");
        }
        auto result = reverse_mode(spec, input);
        ledger.add_forward(1);
        return std::move(result.jacobian);
    }
    auto jac = shift_based(spec, input, method, mode, base);
    ledger.add_backward(backward_calls_per_image(spec.layer_count(), spec.num_qubits, method));
    return jac;
}

QNodeJacobian jacobian(const CircuitSpec &spec, const circuit::QNodeInput &input,
                       const GradMethod &method, CallLedger &ledger,
                       const EvalMode &mode) {
    return jacobian(spec, circuit::encode(spec, input), method, ledger, mode);
}

ValueAndJacobian value_and_jacobian(const CircuitSpec &spec,
                                    const EncodedInput &input,
                                    const GradMethod &method, CallLedger &ledger,
                                    const EvalMode &mode) {
    validate(method);
    circuit::check_input(spec, input);
    if (std::holds_alternative<Backprop>(method)) {
        if (std::holds_alternative<circuit::Shots>(mode)) {
            throw CapabilityError(
                "backprop needs the simulated statevector and cannot run in shot mode");
        }
        auto result = reverse_mode(spec, input);
        ledger.add_forward(1);
        return result;
    }
    ValueAndJacobian out;
    out.value = forward(spec, input, ledger, mode);
    out.jacobian = jacobian(spec, input, method, ledger, mode, &out.value);
    return out;
}

LedgerPrediction ledger_predict(std::uint64_t train, std::uint64_t val,
                                std::uint64_t layers, std::uint64_t qubits,
                                const GradMethod &method) {
    return {train + val, train * backward_calls_per_image(layers, qubits, method)};
}

ReconcileReport ledger_reconcile(const LedgerCounts &measured,
                                 const LedgerPrediction &predicted) {
    ReconcileReport report;
    report.measured = measured;
    report.predicted = predicted;
    report.ok = measured.n_forward == predicted.n_forward &&
                measured.n_backward == predicted.n_backward;
    auto signed_diff = [](std::uint64_t a, std::uint64_t b) {
        return static_cast<long long>(a) - static_cast<long long>(b);
    };
    std::ostringstream os;
    os << (report.ok ? "ledger ok" : "ledger mismatch") << ": forward "
       << measured.n_forward << "/" << predicted.n_forward << ", backward "
       << measured.n_backward << "/" << predicted.n_backward << ", total "
       << measured.n_calls() << "/" << predicted.n_calls();
    if (!report.ok) {
        os << " (measured - predicted: forward "
           << signed_diff(measured.n_forward, predicted.n_forward) << ", backward "
           << signed_diff(measured.n_backward, predicted.n_backward) << ", total "
           << signed_diff(measured.n_calls(), predicted.n_calls()) << ")";
    }
    report.text = os.str();
    if (!report.ok) {
        throw ReconciliationError(report.text);
    }
    return report;
}

ReconcileReport ledger_reconcile(const CallLedger &ledger, const GradMethod &method) {
    const auto &ctx = ledger.context();
    return ledger_reconcile(ledger.counts(), ledger_predict(ctx.train, ctx.val, ctx.layers,
                                                            ctx.qubits, method));
}

nlohmann::json ledger_epoch_json(std::size_t epoch, const GradMethod &method,
                                 const LedgerCounts &counts, std::uint64_t predicted) {
    return {{"epoch", epoch},
            {"method", method_name(method)},
            {"n_forward", counts.n_forward},
            {"n_backward", counts.n_backward},
            {"n_calls", counts.n_calls()},
            {"predicted", predicted}};
}

} // namespace qcrack::autodiff
