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

#pragma once

#include <stdexcept>
#include <string>

namespace entdrop {

/// Invalid static setup: out-of-range qubit counts, mismatched shapes,
/// malformed config files, empty datasets.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Malformed dataset contents, e.g. a classification target that is not
/// one-hot.
struct DataError : std::runtime_error {
    explicit DataError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Input value outside the encoding function's domain (|x| > 1 for the
/// arcsin encoding). The message names the offending value.
struct EncodingDomainError : std::domain_error {
    explicit EncodingDomainError(const std::string &msg)
        : std::domain_error(msg) {}
};

/// Requested analysis is not defined for the given model, e.g. a Fourier
/// spectrum of a model reading more than one input feature.
struct AnalysisError : std::runtime_error {
    explicit AnalysisError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Training aborted mid-run (non-finite cost or gradient). The message
/// carries the iteration index.
struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace entdrop
