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
/**
 * @file
 * Time-dependent Schroedinger propagation with a midpoint exponential
 * integrator: psi <- exp(-i H(s_k + ds/2) tau ds) psi, hbar = 1.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "stalab/qcore.hpp"

namespace stalab::dynamics {

/// H(s) on s in [0, 1]; physical time is t = s * tau.
using OperatorPath = std::function<HermitianOperator(double)>;
/// Projector onto the instantaneous ground space at s.
using GroundProvider = std::function<HermitianOperator(double)>;

struct PropagationResult {
    QuantumState final_state;
    std::vector<std::pair<double, double>> fidelity_trace; ///< (s, overlap^2)
    std::size_t steps;
    double tau;
    double norm_drift; ///< | ||psi(1)|| - 1 | before renormalization
};

inline constexpr std::size_t kMinSteps = 100;
inline constexpr std::size_t kTracePoints = 101;

/// max(2000, ceil(200 tau max_s ||H(s)||_2)), the norm sampled on 33 points.
std::size_t default_steps(const OperatorPath& path, double tau);

/// Propagates @p psi0 and records |<psi0|psi(s)>|^2 on kTracePoints points.
PropagationResult propagate(const OperatorPath& path, const QuantumState& psi0, double tau,
                            std::size_t steps);

/// Same propagation, but the trace records <psi(s)|P_ground(s)|psi(s)>.
PropagationResult ground_fidelity_trace(const OperatorPath& path, const QuantumState& psi0,
                                        double tau, std::size_t steps,
                                        const GroundProvider& ground);

/// Fidelity of @p state with the subspace onto which @p projector projects.
double subspace_fidelity(const QuantumState& state, const HermitianOperator& projector);

} // namespace stalab::dynamics
