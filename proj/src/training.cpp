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

#include "entdrop/training.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "entdrop/errors.hpp"
#include "entdrop/format.hpp"

namespace entdrop {

namespace {

constexpr double kProbClamp = 1e-12;

double clamp_prob(double p) {
    return std::clamp(p, kProbClamp, 1.0 - kProbClamp);
}

void check_one_hot(const ClassificationPoint &p, std::size_t index) {
    const bool class0 = p.y[0] == 1.0 && p.y[1] == 0.0;
    const bool class1 = p.y[0] == 0.0 && p.y[1] == 1.0;
    if (!class0 && !class1) {
        throw DataError("classification target " + std::to_string(index) +
                        " is (" + format_double(p.y[0]) + ", " +
                        format_double(p.y[1]) + "), expected (1,0) or (0,1)");
    }
}

// The per-cost-kind pieces of the training loop.
struct Problem {
    // mask == nullptr means the undropped circuit.
    std::function<double(const ParamVector &, const DropoutMask *)> train_cost;
    std::function<double(const ParamVector &)> test_cost;
    std::function<GradientVector(const ParamVector &, const DropoutMask &)>
        gradient;
};

TrainTrace train_loop(const AnsatzSpec &spec, const ParamVector &init_params,
                      const TrainConfig &config, const Problem &problem) {
    spec.validate();
    config.validate();
    if (init_params.size() != static_cast<std::size_t>(spec.param_count())) {
        throw ConfigError("initial parameter vector has " +
                          std::to_string(init_params.size()) +
                          " entries, spec needs " +
                          std::to_string(spec.param_count()));
    }

    ParamVector params = init_params;
    AdamState adam(params.size());
    Rng mask_rng(derive_seed(config.seed, streams::kDropoutMask));

    // With either rate at zero the sampled mask is always all-true, so the
    // sampler is skipped entirely; the mask stream is dedicated, making the
    // two paths bit-identical.
    const bool dropout_active =
        config.layer_dropout_rate > 0.0 && config.gate_dropout_rate > 0.0;
    const DropoutMask full_mask = DropoutMask::all_true(spec);

    TrainTrace trace;
    trace.records.reserve(config.iterations / config.eval_every);

    for (int iter = 1; iter <= config.iterations; ++iter) {
        const DropoutMask mask =
            dropout_active
                ? sample_dropout_mask(spec, config.layer_dropout_rate,
                                      config.gate_dropout_rate, mask_rng)
                : full_mask;

        GradientVector grad = problem.gradient(params, mask);
        if (config.regularizer != Regularizer::None) {
            const Penalty penalty =
                regularization_penalty(params, config.regularizer,
                                       config.lambda);
            for (std::size_t i = 0; i < grad.size(); ++i) {
                grad[i] += penalty.subgradient[i];
            }
        }
        if (!grad.all_finite()) {
            throw TrainingError("non-finite gradient at iteration " +
                                std::to_string(iter));
        }
        adam_step(params, grad, adam, config);

        if (iter % config.eval_every == 0) {
            const double in_masked =
                problem.train_cost(params, dropout_active ? &mask : nullptr);
            const double in_full = dropout_active
                                       ? problem.train_cost(params, nullptr)
                                       : in_masked;
            const double out = problem.test_cost(params);
            if (!std::isfinite(in_masked) || !std::isfinite(in_full) ||
                !std::isfinite(out)) {
                throw TrainingError("non-finite cost at iteration " +
                                    std::to_string(iter));
            }
            trace.records.push_back(
                {iter, in_masked, in_full, out, mask.removed_count()});
            if (config.record_params) {
                trace.param_history.push_back(params);
            }
        }
    }
    trace.final_params = std::move(params);
    return trace;
}

} // namespace

void TrainConfig::validate() const {
    if (iterations < 1) {
        throw ConfigError("train iterations must be >= 1, got " +
                          std::to_string(iterations));
    }
    if (!(learning_rate > 0.0)) {
        throw ConfigError("train learning_rate must be > 0");
    }
    if (adam_beta1 < 0.0 || adam_beta1 >= 1.0 || adam_beta2 < 0.0 ||
        adam_beta2 >= 1.0) {
        throw ConfigError("adam betas must lie in [0, 1)");
    }
    if (!(adam_epsilon > 0.0)) {
        throw ConfigError("adam_epsilon must be > 0");
    }
    if (layer_dropout_rate < 0.0 || layer_dropout_rate > 1.0) {
        throw ConfigError("layer_dropout_rate must lie in [0, 1], got " +
                          format_double(layer_dropout_rate));
    }
    if (gate_dropout_rate < 0.0 || gate_dropout_rate > 1.0) {
        throw ConfigError("gate_dropout_rate must lie in [0, 1], got " +
                          format_double(gate_dropout_rate));
    }
    if (lambda < 0.0) {
        throw ConfigError("regularization lambda must be >= 0, got " +
                          format_double(lambda));
    }
    if (eval_every < 1) {
        throw ConfigError("eval_every must be >= 1, got " +
                          std::to_string(eval_every));
    }
}

double TrainTrace::final_out() const {
    return records.empty() ? std::numeric_limits<double>::quiet_NaN()
                           : records.back().out_sample;
}

double TrainTrace::min_out() const {
    double best = std::numeric_limits<double>::infinity();
    for (const TraceRecord &r : records) {
        best = std::min(best, r.out_sample);
    }
    return best;
}

double TrainTrace::final_in_full() const {
    return records.empty() ? std::numeric_limits<double>::quiet_NaN()
                           : records.back().in_sample_full;
}

void write_trace_csv(const TrainTrace &trace, std::ostream &out) {
    out << "iter,in_sample,in_sample_fullmask,out_sample,removed_gate_count\n";
    for (const TraceRecord &r : trace.records) {
        out << r.iteration << ',' << format_double(r.in_sample) << ','
            << format_double(r.in_sample_full) << ','
            << format_double(r.out_sample) << ',' << r.removed_gates << '\n';
    }
}

void write_trace_json(const TrainTrace &trace, std::uint64_t seed,
                      const std::string &config_echo, std::ostream &out) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["seed"] = seed;
    j["final_out_sample"] = trace.final_out();
    j["min_out_sample"] = trace.min_out();
    j["final_in_sample_fullmask"] = trace.final_in_full();
    j["records"] = trace.records.size();
    j["config_echo"] = config_echo;
    out << j.dump(2) << '\n';
}

DropoutMask sample_dropout_mask(const AnsatzSpec &spec, double layer_rate,
                                double gate_rate, Rng &rng) {
    if (layer_rate < 0.0 || layer_rate > 1.0 || gate_rate < 0.0 ||
        gate_rate > 1.0) {
        throw ConfigError("dropout rates must lie in [0, 1]");
    }
    DropoutMask mask = DropoutMask::all_true(spec);
    for (std::size_t l = 0; l < mask.keep.size(); ++l) {
        if (!rng.bernoulli(layer_rate)) {
            continue;
        }
        for (std::size_t s = 0; s < mask.keep[l].size(); ++s) {
            if (rng.bernoulli(gate_rate)) {
                mask.keep[l][s] = 0;
            }
        }
    }
    return mask;
}

double expected_removed_gates(const AnsatzSpec &spec, double layer_rate,
                              double gate_rate) {
    return layer_rate * gate_rate *
           static_cast<double>(spec.total_entangler_slots());
}

double removed_gates_stddev(const AnsatzSpec &spec, double layer_rate,
                            double gate_rate) {
    // Per layer the count is Bernoulli(layer_rate) * Binomial(S, gate_rate);
    // layers are independent.
    double var = 0.0;
    for (const auto &layer : spec.entangler_slots) {
        const double s = static_cast<double>(layer.size());
        var += layer_rate * s * gate_rate * (1.0 - gate_rate) +
               layer_rate * (1.0 - layer_rate) * s * s * gate_rate * gate_rate;
    }
    return std::sqrt(var);
}

namespace {

double mse_cost_impl(const AnsatzSpec &spec, const ParamVector &params,
                     const RegressionDataset &dataset,
                     const DropoutMask *mask) {
    if (dataset.points.empty()) {
        throw ConfigError("mse_cost needs a nonempty dataset");
    }
    double acc = 0.0;
    for (const RegressionPoint &p : dataset.points) {
        const double f = mask ? forward(spec, params, p.x, *mask)
                              : forward(spec, params, p.x);
        const double r = p.y - f;
        acc += r * r;
    }
    return acc / static_cast<double>(dataset.points.size());
}

double cross_entropy_cost_impl(const AnsatzSpec &spec,
                               const ParamVector &params,
                               const ClassificationDataset &dataset,
                               const DropoutMask *mask) {
    if (dataset.points.empty()) {
        throw ConfigError("cross_entropy_cost needs a nonempty dataset");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < dataset.points.size(); ++k) {
        const ClassificationPoint &p = dataset.points[k];
        check_one_hot(p, k);
        const std::span<const double> x(p.x.data(), p.x.size());
        const std::array<double, 2> probs =
            mask ? classifier_output(spec, params, x, *mask)
                 : classifier_output(spec, params, x);
        acc -= p.y[0] * std::log(clamp_prob(probs[0])) +
               p.y[1] * std::log(clamp_prob(probs[1]));
    }
    return acc;
}

} // namespace

double mse_cost(const AnsatzSpec &spec, const ParamVector &params,
                const RegressionDataset &dataset, const DropoutMask &mask) {
    return mse_cost_impl(spec, params, dataset, &mask);
}

double mse_cost(const AnsatzSpec &spec, const ParamVector &params,
                const RegressionDataset &dataset) {
    return mse_cost_impl(spec, params, dataset, nullptr);
}

double cross_entropy_cost(const AnsatzSpec &spec, const ParamVector &params,
                          const ClassificationDataset &dataset,
                          const DropoutMask &mask) {
    return cross_entropy_cost_impl(spec, params, dataset, &mask);
}

double cross_entropy_cost(const AnsatzSpec &spec, const ParamVector &params,
                          const ClassificationDataset &dataset) {
    return cross_entropy_cost_impl(spec, params, dataset, nullptr);
}

Penalty regularization_penalty(const ParamVector &params, Regularizer kind,
                               double lambda) {
    if (lambda < 0.0) {
        throw ConfigError("regularization lambda must be >= 0");
    }
    Penalty penalty;
    penalty.subgradient = GradientVector(params.size());
    switch (kind) {
    case Regularizer::None:
        break;
    case Regularizer::L1:
        for (std::size_t i = 0; i < params.size(); ++i) {
            penalty.value += lambda * std::abs(params[i]);
            const double sign =
                params[i] > 0.0 ? 1.0 : (params[i] < 0.0 ? -1.0 : 0.0);
            penalty.subgradient[i] = lambda * sign;
        }
        break;
    case Regularizer::L2:
        for (std::size_t i = 0; i < params.size(); ++i) {
            penalty.value += lambda * params[i] * params[i];
            penalty.subgradient[i] = 2.0 * lambda * params[i];
        }
        break;
    }
    return penalty;
}

void adam_step(ParamVector &params, const GradientVector &grad,
               AdamState &state, const TrainConfig &config) {
    if (grad.size() != params.size()) {
        throw ConfigError("gradient size " + std::to_string(grad.size()) +
                          " does not match parameter size " +
                          std::to_string(params.size()));
    }
    if (state.m.empty()) {
        state = AdamState(params.size());
    }
    if (state.m.size() != params.size()) {
        throw ConfigError("Adam state size does not match parameter size");
    }
    if (!grad.all_finite()) {
        throw TrainingError("non-finite gradient entry passed to adam_step");
    }
    state.step += 1;
    const double b1 = config.adam_beta1;
    const double b2 = config.adam_beta2;
    const double bias1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
    const double bias2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
    for (std::size_t i = 0; i < params.size(); ++i) {
        state.m[i] = b1 * state.m[i] + (1.0 - b1) * grad[i];
        state.v[i] = b2 * state.v[i] + (1.0 - b2) * grad[i] * grad[i];
        const double m_hat = state.m[i] / bias1;
        const double v_hat = state.v[i] / bias2;
        params[i] -= config.learning_rate * m_hat /
                     (std::sqrt(v_hat) + config.adam_epsilon);
    }
}

ParamVector random_init_params(const AnsatzSpec &spec, std::uint64_t seed) {
    Rng rng(derive_seed(seed, streams::kParamInit));
    ParamVector params = ParamVector::zeros(spec);
    for (std::size_t i = 0; i < params.size(); ++i) {
        params[i] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return params;
}

TrainTrace train(const AnsatzSpec &spec, const ParamVector &init_params,
                 const RegressionDataset &train_set,
                 const RegressionDataset &test_set,
                 const TrainConfig &config) {
    if (train_set.points.empty() || test_set.points.empty()) {
        throw ConfigError("train needs nonempty train and test datasets");
    }
    Problem problem;
    problem.train_cost = [&](const ParamVector &p, const DropoutMask *mask) {
        return mask ? mse_cost(spec, p, train_set, *mask)
                    : mse_cost(spec, p, train_set);
    };
    problem.test_cost = [&](const ParamVector &p) {
        return mse_cost(spec, p, test_set);
    };
    problem.gradient = [&](const ParamVector &p, const DropoutMask &mask) {
        return cost_gradient(spec, p, train_set, mask, config.grad_method);
    };
    return train_loop(spec, init_params, config, problem);
}

TrainTrace train(const AnsatzSpec &spec, const ParamVector &init_params,
                 const ClassificationDataset &train_set,
                 const ClassificationDataset &test_set,
                 const TrainConfig &config) {
    if (train_set.points.empty() || test_set.points.empty()) {
        throw ConfigError("train needs nonempty train and test datasets");
    }
    Problem problem;
    problem.train_cost = [&](const ParamVector &p, const DropoutMask *mask) {
        return mask ? cross_entropy_cost(spec, p, train_set, *mask)
                    : cross_entropy_cost(spec, p, train_set);
    };
    problem.test_cost = [&](const ParamVector &p) {
        return cross_entropy_cost(spec, p, test_set);
    };
    problem.gradient = [&](const ParamVector &p, const DropoutMask &mask) {
        return cost_gradient(spec, p, train_set, mask, config.grad_method);
    };
    return train_loop(spec, init_params, config, problem);
}

} // namespace entdrop
