// Copyright 2026 The entdrop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * The full-batch learning loop: per-iteration entangling-dropout mask
 * sampling, Adam updates of the rotation angles, MSE / cross-entropy costs,
 * optional L1/L2 penalties, and per-iteration error tracing.
 *
 * Each iteration samples a fresh mask (layers chosen with the layer dropout
 * rate, CNOT slots within chosen layers removed with the gate dropout rate),
 * takes the cost gradient on that masked circuit, and applies one Adam step.
 * Out-of-sample error is always evaluated on the undropped circuit.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "entdrop/ansatz.hpp"
#include "entdrop/datasets.hpp"
#include "entdrop/gradients.hpp"
#include "entdrop/rng.hpp"

namespace entdrop {

enum class Regularizer { None, L1, L2 };

struct TrainConfig {
    int iterations = 1000;
    double learning_rate = 0.01;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
    double layer_dropout_rate = 0.0;
    double gate_dropout_rate = 0.0;
    Regularizer regularizer = Regularizer::None;
    double lambda = 0.0;
    std::uint64_t seed = 0;
    int eval_every = 1;
    GradMethod grad_method = GradMethod::Adjoint;
    /// Retain the parameter vector at every recorded iteration.
    bool record_params = false;

    void validate() const;

    bool operator==(const TrainConfig &) const = default;
};

/// One recorded iteration. in_sample is the training cost on the circuit
/// that was optimized this step (the masked one); in_sample_full re-evaluates
/// it on the undropped circuit; out_sample is the test cost, always on the
/// undropped circuit.
struct TraceRecord {
    int iteration = 0;
    double in_sample = 0.0;
    double in_sample_full = 0.0;
    double out_sample = 0.0;
    int removed_gates = 0;

    bool operator==(const TraceRecord &) const = default;
};

struct TrainTrace {
    std::vector<TraceRecord> records;
    ParamVector final_params;
    /// Populated only when TrainConfig::record_params is set.
    std::vector<ParamVector> param_history;

    double final_out() const;
    double min_out() const;
    double final_in_full() const;

    bool operator==(const TrainTrace &) const = default;
};

/// Writes "iter,in_sample,in_sample_fullmask,out_sample,removed_gate_count"
/// rows, one per recorded iteration.
void write_trace_csv(const TrainTrace &trace, std::ostream &out);

/// JSON run summary: schema version, seed, final/min errors, and the config
/// echo text handed in by the caller.
void write_trace_json(const TrainTrace &trace, std::uint64_t seed,
                      const std::string &config_echo, std::ostream &out);

/// Fresh dropout mask: each layer is selected with probability layer_rate;
/// within selected layers each CNOT slot is removed independently with
/// probability gate_rate. Unselected layers keep all slots.
DropoutMask sample_dropout_mask(const AnsatzSpec &spec, double layer_rate,
                                double gate_rate, Rng &rng);

/// Analytic expected number of removed CNOTs per sampled mask:
/// sum over layers of slots_l * layer_rate * gate_rate.
double expected_removed_gates(const AnsatzSpec &spec, double layer_rate,
                              double gate_rate);

/// Analytic standard deviation of the removed-CNOT count of one mask under
/// the two-stage sampling above.
double removed_gates_stddev(const AnsatzSpec &spec, double layer_rate,
                            double gate_rate);

/// (1/D) * sum_k (y_k - f(x_k))^2 on the masked circuit.
double mse_cost(const AnsatzSpec &spec, const ParamVector &params,
                const RegressionDataset &dataset, const DropoutMask &mask);
double mse_cost(const AnsatzSpec &spec, const ParamVector &params,
                const RegressionDataset &dataset);

/// -sum_k y_k . log F(x_k) with probabilities clamped to
/// [1e-12, 1 - 1e-12]. Targets must be exactly one-hot.
double cross_entropy_cost(const AnsatzSpec &spec, const ParamVector &params,
                          const ClassificationDataset &dataset,
                          const DropoutMask &mask);
double cross_entropy_cost(const AnsatzSpec &spec, const ParamVector &params,
                          const ClassificationDataset &dataset);

struct Penalty {
    double value = 0.0;
    GradientVector subgradient;
};

/// lambda * sum_i |theta_i|^p with p = 1 (L1) or 2 (L2), plus its
/// subgradient (sign(0) taken as 0 for L1).
Penalty regularization_penalty(const ParamVector &params, Regularizer kind,
                               double lambda);

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    long step = 0;

    AdamState() = default;
    explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}
};

/// One bias-corrected Adam update of `params` in place. Throws TrainingError
/// on any non-finite gradient entry.
void adam_step(ParamVector &params, const GradientVector &grad,
               AdamState &state, const TrainConfig &config);

/// i.i.d. uniform angles on [0, 2*pi), drawn from the seed's dedicated
/// initialization stream.
ParamVector random_init_params(const AnsatzSpec &spec, std::uint64_t seed);

/// Full training run on a regression problem (MSE cost).
TrainTrace train(const AnsatzSpec &spec, const ParamVector &init_params,
                 const RegressionDataset &train_set,
                 const RegressionDataset &test_set, const TrainConfig &config);

/// Full training run on a classification problem (cross-entropy cost).
TrainTrace train(const AnsatzSpec &spec, const ParamVector &init_params,
                 const ClassificationDataset &train_set,
                 const ClassificationDataset &test_set,
                 const TrainConfig &config);

} // namespace entdrop
