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
 * Gradients of the circuit outputs with respect to the encoding angles and
 * the trainable angles, by reverse-mode simulation (backprop), finite
 * differences, or the parameter-shift rule, plus exact bookkeeping of how
 * many circuit executions each method costs.
 *
 * Call accounting per training image, with L = q_depth + 1 layers of Q
 * shiftable angles each:
 *
 *   method               forward   backward
 *   backprop             1         0
 *   finite-diff forward  1         L*Q
 *   finite-diff central  1         2*L*Q
 *   param-shift          1         2*L*Q
 *
 * Validation images cost one forward call each.
 */
#pragma once

#include "qcrack/Circuit.hpp"

#include <atomic>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qcrack::autodiff {

struct Backprop {};

enum class FdVariant { Forward, Central };

struct FiniteDiff {
    double step{1e-4};
    FdVariant variant{FdVariant::Forward};
};

struct ParamShift {
    double shift{std::numbers::pi / 2.0};
    double coeff{0.5};
};

using GradMethod = std::variant<Backprop, FiniteDiff, ParamShift>;

/// Throws ArgumentError for step <= 0, shift outside (0, pi], coeff <= 0.
void validate(const GradMethod &method);

/// "backprop", "finite-diff", or "param-shift".
[[nodiscard]] std::string method_name(const GradMethod &method);

[[nodiscard]] nlohmann::json to_json(const GradMethod &method);
/// Accepts {"kind": name, ...knobs}. Throws FormatError.
[[nodiscard]] GradMethod method_from_json(const nlohmann::json &j);

/// Sizes an epoch is accounted against: T training images, V validation
/// images, L layers, Q qubits.
struct LedgerContext {
    std::uint64_t train{0};
    std::uint64_t val{0};
    std::uint64_t layers{0};
    std::uint64_t qubits{0};
};

struct LedgerCounts {
    std::uint64_t n_forward{0};
    std::uint64_t n_backward{0};

    [[nodiscard]] std::uint64_t n_calls() const noexcept {
        return n_forward + n_backward;
    }
    LedgerCounts &operator+=(const LedgerCounts &o) noexcept {
        n_forward += o.n_forward;
        n_backward += o.n_backward;
        return *this;
    }
    bool operator==(const LedgerCounts &) const = default;
};

/// Thread-safe call counter.
class CallLedger {
  public:
    CallLedger() = default;
    explicit CallLedger(LedgerContext context) : context_{context} {}
    CallLedger(const CallLedger &other)
        : forward_{other.forward_.load()}, backward_{other.backward_.load()},
          context_{other.context_} {}
    CallLedger &operator=(const CallLedger &) = delete;

    void add_forward(std::uint64_t n = 1) noexcept { forward_ += n; }
    void add_backward(std::uint64_t n) noexcept { backward_ += n; }

    [[nodiscard]] LedgerCounts counts() const noexcept {
        return {forward_.load(), backward_.load()};
    }
    [[nodiscard]] std::uint64_t n_calls() const noexcept {
        return counts().n_calls();
    }
    [[nodiscard]] const LedgerContext &context() const noexcept { return context_; }
    void set_context(const LedgerContext &context) noexcept { context_ = context; }

  private:
    std::atomic<std::uint64_t> forward_{0};
    std::atomic<std::uint64_t> backward_{0};
    LedgerContext context_{};
};

/// Row-major matrices: rows are output wires.
struct QNodeJacobian {
    std::size_t outputs{0};
    std::size_t params{0};
    std::size_t inputs{0};
    std::vector<double> d_params; ///< outputs x params
    std::vector<double> d_inputs; ///< outputs x inputs (encoding angles)

    [[nodiscard]] double dparam(std::size_t out, std::size_t p) const {
        return d_params[out * params + p];
    }
    [[nodiscard]] double dinput(std::size_t out, std::size_t i) const {
        return d_inputs[out * inputs + i];
    }
};

struct ValueAndJacobian {
    circuit::QNodeOutput value;
    QNodeJacobian jacobian;
};

/**
 * Jacobian alone. Charges the ledger as follows: backprop one forward call
 * (the reverse sweep needs its own forward pass); param-shift 2*L*Q backward;
 * finite-diff L*Q (forward) or 2*L*Q (central) backward.
 *
 * Forward finite differences reuse `base` as f at the unshifted point. When
 * it is absent the base value is simulated here without being charged; it is
 * assumed to be the caller's already-counted forward call.
 *
 * Throws CapabilityError for backprop in shot mode.
 */
[[nodiscard]] QNodeJacobian
jacobian(const circuit::CircuitSpec &spec, const circuit::EncodedInput &input,
         const GradMethod &method, CallLedger &ledger,
         const circuit::EvalMode &mode = circuit::Exact{},
         const circuit::QNodeOutput *base = nullptr);

[[nodiscard]] QNodeJacobian
jacobian(const circuit::CircuitSpec &spec, const circuit::QNodeInput &input,
         const GradMethod &method, CallLedger &ledger,
         const circuit::EvalMode &mode = circuit::Exact{});

/// Forward value and Jacobian for one training image: exactly one forward
/// call plus the method's backward calls.
[[nodiscard]] ValueAndJacobian
value_and_jacobian(const circuit::CircuitSpec &spec,
                   const circuit::EncodedInput &input, const GradMethod &method,
                   CallLedger &ledger,
                   const circuit::EvalMode &mode = circuit::Exact{});

/// Counts one forward call and evaluates.
[[nodiscard]] circuit::QNodeOutput
forward(const circuit::CircuitSpec &spec, const circuit::EncodedInput &input,
        CallLedger &ledger, const circuit::EvalMode &mode = circuit::Exact{});

/// Backward circuit executions charged for one training image.
[[nodiscard]] std::uint64_t backward_calls_per_image(std::uint64_t layers,
                                                     std::uint64_t qubits,
                                                     const GradMethod &method);

struct LedgerPrediction {
    std::uint64_t n_forward{0};
    std::uint64_t n_backward{0};
    [[nodiscard]] std::uint64_t n_calls() const noexcept {
        return n_forward + n_backward;
    }
};

/// Closed-form calls per epoch: T+V forward plus T times the per-image
/// backward cost.
[[nodiscard]] LedgerPrediction ledger_predict(std::uint64_t train,
                                              std::uint64_t val,
                                              std::uint64_t layers,
                                              std::uint64_t qubits,
                                              const GradMethod &method);

struct ReconcileReport {
    LedgerCounts measured;
    LedgerPrediction predicted;
    bool ok{false};
    std::string text;
};

/// Compares measured counts with the prediction for the ledger's context.
/// Throws ReconciliationError (carrying the report text) on any mismatch.
ReconcileReport ledger_reconcile(const CallLedger &ledger,
                                 const GradMethod &method);
ReconcileReport ledger_reconcile(const LedgerCounts &measured,
                                 const LedgerPrediction &predicted);

/// `{"epoch":k,"method":...,"n_forward":...,"n_backward":...,"n_calls":...,"predicted":...}`
[[nodiscard]] nlohmann::json ledger_epoch_json(std::size_t epoch,
                                               const GradMethod &method,
                                               const LedgerCounts &counts,
                                               std::uint64_t predicted);

} // namespace qcrack::autodiff
