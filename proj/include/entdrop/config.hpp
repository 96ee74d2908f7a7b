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
 * Experiment configuration: a flat, diffable key-value text format with one
 * section per module ([ansatz], [dataset], [train], [experiment], [sweep],
 * [compare]). Doubles are rendered in shortest exact form, so
 * parse(render(config)) reproduces the config bit-for-bit.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entdrop/ansatz.hpp"
#include "entdrop/datasets.hpp"
#include "entdrop/training.hpp"

namespace entdrop {

struct DatasetConfig {
    std::string kind = "sine"; ///< sine | abs | classification
    int train_count = 20;
    int test_count = 100;
    double noise_std = 0.1;
    XSampling sampling = XSampling::UniformRandom;
    std::uint64_t data_seed = 42;

    /// Input feature dimension implied by the generator.
    int input_dim() const { return kind == "classification" ? 2 : 1; }

    bool operator==(const DatasetConfig &) const = default;
};

struct SweepConfig {
    std::string axis = "layer_rate"; ///< layer_rate | gate_rate
    std::vector<double> values = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                  0.6, 0.7, 0.8, 0.9, 1.0};
    /// Value of the rate that is held fixed during the sweep.
    double fixed_rate = 0.3;

    bool operator==(const SweepConfig &) const = default;
};

struct CompareConfig {
    double dropout_layer_rate = 0.2;
    double dropout_gate_rate = 0.2;
    std::vector<double> lambda_grid = {1e-4, 3e-4, 1e-3, 3e-3, 1e-2};
    int base_iterations = 1000;
    int reg_iterations = 10000;
    int reg_eval_every = 10;

    bool operator==(const CompareConfig &) const = default;
};

/// Everything needed to reproduce a run: circuit, data generator, training
/// hyperparameters, the ensemble seed list, and output location.
struct ExperimentConfig {
    AnsatzSpec ansatz = AnsatzSpec::regression_default(10);
    DatasetConfig dataset;
    TrainConfig train;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    std::string output_dir = "out";
    SweepConfig sweep;
    CompareConfig compare;

    /// Cross-field validation with named-field diagnostics.
    void validate() const;

    bool operator==(const ExperimentConfig &) const = default;
};

/// Parses config text. Unknown sections or keys raise ConfigError naming
/// them; omitted keys keep their defaults.
ExperimentConfig parse_config(const std::string &text);

/// Reads and parses a config file.
ExperimentConfig load_config(const std::string &path);

/// Canonical rendering: fixed section and key order, exact doubles.
std::string render_config(const ExperimentConfig &config);

/// Observable text form used inside configs, e.g. "z0", "z0-z1",
/// "z0+0.5*z2".
std::string render_observable(const Observable &obs);
Observable parse_observable(const std::string &text);

} // namespace entdrop
