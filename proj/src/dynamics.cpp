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

#include "stalab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stalab/errors.hpp"

namespace stalab::dynamics {

namespace {

using Recorder = std::function<double(double, const CVector&)>;

PropagationResult run(const OperatorPath& path, const QuantumState& psi0, double tau,
                      std::size_t steps, const Recorder& record) {
    if (steps < kMinSteps) {
        throw DomainError("propagation needs at least " + std::to_string(kMinSteps) + " steps");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw DomainError("tau must be positive and finite");
    }
    const double ds = 1.0 / static_cast<double>(steps);
    const double dt = tau * ds;
    CVector psi = psi0.amplitudes();

    // trace sample j sits at step round(j * steps / 100)
    std::vector<std::size_t> marks(kTracePoints);
    for (std::size_t j = 0; j < kTracePoints; ++j) {
        marks[j] = (j * steps + (kTracePoints - 1) / 2) / (kTracePoints - 1);
    }
    std::vector<std::pair<double, double>> trace;
    trace.reserve(kTracePoints);
    std::size_t next = 0;
    auto maybe_record = [&](std::size_t k) {
        while (next < marks.size() && marks[next] == k) {
            const double s = static_cast<double>(k) * ds;
            trace.emplace_back(s, record(s, psi));
            ++next;
        }
    };

    maybe_record(0);
    for (std::size_t k = 0; k < steps; ++k) {
        const double s_mid = (static_cast<double>(k) + 0.5) * ds;
        const HermitianOperator h = path(s_mid);
        if (static_cast<Eigen::Index>(h.dim()) != psi.size()) {
            throw DomainError("Hamiltonian dimension does not match the state");
        }
        psi = expm_step(h, dt).apply(psi);
        if (!psi.allFinite()) {
            throw NumericalFailure("state became non-finite at step " + std::to_string(k));
        }
        maybe_record(k + 1);
    }
    const double drift = std::abs(psi.norm() - 1.0);
    return {QuantumState::normalized(psi), std::move(trace), steps, tau, drift};
}

} // namespace

std::size_t default_steps(const OperatorPath& path, double tau) {
    double hmax = 0.0;
    for (int i = 0; i <= 32; ++i) {
        hmax = std::max(hmax, spectral_norm(path(i / 32.0)));
    }
    const double want = std::ceil(200.0 * tau * hmax);
    return std::max<std::size_t>(2000, static_cast<std::size_t>(std::min(want, 1e9)));
}

PropagationResult propagate(const OperatorPath& path, const QuantumState& psi0, double tau,
                            std::size_t steps) {
    const CVector ref = psi0.amplitudes();
    return run(path, psi0, tau, steps, [&ref](double, const CVector& psi) {
        return std::norm(ref.dot(psi)) / psi.squaredNorm();
    });
}

PropagationResult ground_fidelity_trace(const OperatorPath& path, const QuantumState& psi0,
                                        double tau, std::size_t steps,
                                        const GroundProvider& ground) {
    return run(path, psi0, tau, steps, [&ground](double s, const CVector& psi) {
        const HermitianOperator p = ground(s);
        return psi.dot(p.apply(psi)).real() / psi.squaredNorm();
    });
}

double subspace_fidelity(const QuantumState& state, const HermitianOperator& projector) {
    const CVector& psi = state.amplitudes();
    return psi.dot(projector.apply(psi)).real();
}

} // namespace stalab::dynamics
