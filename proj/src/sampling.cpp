// Copyright 2026 The stalab Authors
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

#include "stalab/sampling.hpp"

#include <cmath>
#include <numbers>

namespace stalab {

double standard_normal(CounterRng& rng) {
    // Box-Muller; 1 - u keeps the logarithm finite.
    const double u = 1.0 - rng.uniform();
    const double v = rng.uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

QuantumState random_state(std::size_t dim, CounterRng& rng) {
    CVector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = standard_normal(rng);
        v[i] = complex(re, standard_normal(rng));
    }
    return QuantumState::normalized(std::move(v));
}

std::array<double, 3> random_unit_vector(CounterRng& rng) {
    for (;;) {
        std::array<double, 3> a{standard_normal(rng), standard_normal(rng), standard_normal(rng)};
        const double r = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
        if (r > 1e-6) {
            return {a[0] / r, a[1] / r, a[2] / r};
        }
    }
}

} // namespace stalab
