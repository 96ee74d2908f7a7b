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

#include <cmath>
#include <cstdint>
#include <random>

namespace entdrop {

/// splitmix64 mixing step. Used to derive independent stream seeds from a
/// single user-facing seed so that e.g. parameter initialization and dropout
/// mask sampling never share a random stream.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic seed for sub-stream `stream` of `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(~stream));
}

/// Well-known stream tags; keeping them in one place avoids collisions.
namespace streams {
inline constexpr std::uint64_t kParamInit = 1;
inline constexpr std::uint64_t kDropoutMask = 2;
inline constexpr std::uint64_t kTrainData = 3;
inline constexpr std::uint64_t kTestData = 4;
} // namespace streams

/// Seeded random generator with explicit, platform-stable conversions.
/// The uniform and gaussian draws are hand-rolled on top of mt19937_64 so
/// that identical seeds give identical streams on every standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal via the Marsaglia polar method; the spare value is
    /// cached, so draws come in deterministic order.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace entdrop
