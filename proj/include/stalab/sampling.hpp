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

#pragma once

#include <array>
#include <cstddef>

#include "stalab/qcore.hpp"
#include "stalab/rng.hpp"

namespace stalab {

double standard_normal(CounterRng& rng);

/// Haar-random pure state: normalized vector of complex Gaussians.
QuantumState random_state(std::size_t dim, CounterRng& rng);

std::array<double, 3> random_unit_vector(CounterRng& rng);

} // namespace stalab
