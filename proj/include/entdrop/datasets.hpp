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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace entdrop {

/// Scalar regression sample with x in [-1, 1] (the arcsin encoding domain).
struct RegressionPoint {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const RegressionPoint &) const = default;
};

struct RegressionDataset {
    std::vector<RegressionPoint> points;
    bool operator==(const RegressionDataset &) const = default;
};

/// 2-D sample with a one-hot class label, (1,0) or (0,1).
struct ClassificationPoint {
    std::array<double, 2> x{0.0, 0.0};
    std::array<double, 2> y{1.0, 0.0};
    bool operator==(const ClassificationPoint &) const = default;
};

struct ClassificationDataset {
    std::vector<ClassificationPoint> points;
    bool operator==(const ClassificationDataset &) const = default;
};

enum class RegressionTarget {
    Sine, ///< y = sin(pi x)
    Abs   ///< y = |x| - 1/2
};

enum class XSampling { UniformGrid, UniformRandom };

/// Noise-free target value.
double regression_target_value(RegressionTarget target, double x);

/// `count` points with x drawn per `sampling` on [-1, 1] and
/// y = target(x) + N(0, noise_std^2). Deterministic per seed.
RegressionDataset gen_regression(RegressionTarget target, int count,
                                 double noise_std, XSampling sampling,
                                 std::uint64_t seed);

/// `count` points uniform on [-1, 1]^2, labeled (1,0) inside the disk
/// x1^2 + x2^2 < 0.5 and (0,1) outside. Deterministic per seed.
ClassificationDataset gen_classification(int count, std::uint64_t seed);

/// CSV serializations (header row included) so plots and re-runs use
/// identical data.
void write_csv(const RegressionDataset &dataset, std::ostream &out);
void write_csv(const ClassificationDataset &dataset, std::ostream &out);

} // namespace entdrop
