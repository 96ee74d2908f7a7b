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

#include "entdrop/datasets.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "entdrop/errors.hpp"
#include "entdrop/format.hpp"
#include "entdrop/rng.hpp"

namespace entdrop {

double regression_target_value(RegressionTarget target, double x) {
    switch (target) {
    case RegressionTarget::Sine:
        return std::sin(std::numbers::pi * x);
    case RegressionTarget::Abs:
        return std::abs(x) - 0.5;
    }
    throw ConfigError("unknown regression target");
}

RegressionDataset gen_regression(RegressionTarget target, int count,
                                 double noise_std, XSampling sampling,
                                 std::uint64_t seed) {
    if (count < 1) {
        throw ConfigError("gen_regression needs count >= 1, got " +
                          std::to_string(count));
    }
    if (noise_std < 0.0) {
        throw ConfigError("gen_regression needs noise_std >= 0, got " +
                          std::to_string(noise_std));
    }
    Rng rng(seed);
    RegressionDataset dataset;
    dataset.points.reserve(count);
    for (int k = 0; k < count; ++k) {
        double x;
        if (sampling == XSampling::UniformGrid) {
            x = count == 1 ? 0.0 : -1.0 + 2.0 * k / (count - 1);
        } else {
            x = rng.uniform(-1.0, 1.0);
        }
        const double y = regression_target_value(target, x) +
                         noise_std * rng.gaussian();
        dataset.points.push_back({x, y});
    }
    return dataset;
}

ClassificationDataset gen_classification(int count, std::uint64_t seed) {
    if (count < 2) {
        throw ConfigError("gen_classification needs count >= 2, got " +
                          std::to_string(count));
    }
    Rng rng(seed);
    ClassificationDataset dataset;
    dataset.points.reserve(count);
    for (int k = 0; k < count; ++k) {
        const double x1 = rng.uniform(-1.0, 1.0);
        const double x2 = rng.uniform(-1.0, 1.0);
        ClassificationPoint p;
        p.x = {x1, x2};
        p.y = (x1 * x1 + x2 * x2 < 0.5) ? std::array<double, 2>{1.0, 0.0}
                                        : std::array<double, 2>{0.0, 1.0};
        dataset.points.push_back(p);
    }
    return dataset;
}

void write_csv(const RegressionDataset &dataset, std::ostream &out) {
    out << "x,y\n";
    for (const RegressionPoint &p : dataset.points) {
        out << format_double(p.x) << ',' << format_double(p.y) << '\n';
    }
}

void write_csv(const ClassificationDataset &dataset, std::ostream &out) {
    out << "x1,x2,y1,y2\n";
    for (const ClassificationPoint &p : dataset.points) {
        out << format_double(p.x[0]) << ',' << format_double(p.x[1]) << ','
            << format_double(p.y[0]) << ',' << format_double(p.y[1]) << '\n';
    }
}

} // namespace entdrop
