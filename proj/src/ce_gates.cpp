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

#include "stalab/ce_gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stalab/errors.hpp"

namespace stalab::ce {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

CVector qubit(complex a0, complex a1) {
    CVector v(2);
    v << a0, a1;
    return v;
}

} // namespace

void GateSpec::validate() const {
    if (n < 0 || n > kMaxControls) {
        throw DomainError("control-qubit count must lie in [0, " + std::to_string(kMaxControls) + "]");
    }
    const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (!(std::abs(len - 1.0) <= 1e-12)) {
        throw DomainError("rotation axis must have unit length");
    }
    if (!(theta0 > 0.0 && theta0 <= std::numbers::pi)) {
        throw DomainError("theta0 must lie in (0, pi]");
    }
    if (!std::isfinite(phi)) {
        throw DomainError("phi must be finite");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("omega must be positive");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw DomainError("tau must be positive");
    }
}

HermitianOperator build_h_xi(double xi, double s, const GateSpec& spec) {
    const double th = spec.theta0 * s;
    const complex off = std::sin(th) * std::polar(1.0, -xi); // sigma_x cos xi + sigma_y sin xi, upper entry
    CMatrix m(2, 2);
    m << std::cos(th), off, std::conj(off), -std::cos(th);
    return HermitianOperator(-spec.omega * m);
}

HermitianOperator build_cd_term(double xi, const GateSpec& spec) {
    // sigma_y cos xi - sigma_x sin xi has upper off-diagonal -i cos xi - sin xi = -i e^{-i xi}
    const complex upper = complex(0.0, -1.0) * std::polar(1.0, -xi);
    CMatrix m(2, 2);
    m << 0.0, upper, std::conj(upper), 0.0;
    return HermitianOperator((spec.theta0 / (2.0 * spec.tau)) * m);
}

std::array<QuantumState, 2> axis_states(const std::array<double, 3>& axis) {
    const double alpha = std::acos(std::clamp(axis[2], -1.0, 1.0));
    const double beta = std::atan2(axis[1], axis[0]);
    const complex e = std::polar(1.0, beta);
    return {QuantumState::normalized(qubit(std::cos(alpha / 2), e * std::sin(alpha / 2))),
            QuantumState::normalized(qubit(std::sin(alpha / 2), -e * std::cos(alpha / 2)))};
}

HermitianOperator target_projector(const GateSpec& spec) {
    const auto [plus, minus] = axis_states(spec.axis);
    const std::size_t nc = spec.control_states();
    return tensor(HermitianOperator::projector(QuantumState::basis(nc, nc - 1)),
                  HermitianOperator::projector(minus));
}

HermitianOperator controlled_blocks(const GateSpec& spec, const HermitianOperator& block0,
                                    const HermitianOperator& block_phi) {
    const HermitianOperator p = target_projector(spec);
    const HermitianOperator rest = HermitianOperator::identity(p.dim()) - p;
    return tensor(rest, block0) + tensor(p, block_phi);
}

HermitianOperator build_ce_hamiltonian(double s, const GateSpec& spec) {
    return controlled_blocks(spec, build_h_xi(0.0, s, spec), build_h_xi(spec.phi, s, spec));
}

HermitianOperator build_ce_cd(const GateSpec& spec) {
    return controlled_blocks(spec, build_cd_term(0.0, spec), build_cd_term(spec.phi, spec));
}

HermitianOperator build_superadiabatic_ce(double s, const GateSpec& spec) {
    return controlled_blocks(spec, build_h_xi(0.0, s, spec) + build_cd_term(0.0, spec),
                             build_h_xi(spec.phi, s, spec) + build_cd_term(spec.phi, spec));
}

QuantumState ancilla_eigenstate(double xi, double s, int branch, const GateSpec& spec) {
    const double half = spec.theta0 * s / 2.0;
    const complex e = std::polar(1.0, xi);
    if (branch < 0) {
        return QuantumState::normalized(qubit(std::cos(half), e * std::sin(half)));
    }
    return QuantumState::normalized(qubit(-std::sin(half), e * std::cos(half)));
}

CVector ancilla_eigenstate_ds(double xi, double s, int branch, const GateSpec& spec) {
    const double half = spec.theta0 * s / 2.0;
    const double rate = spec.theta0 / 2.0;
    const complex e = std::polar(1.0, xi);
    if (branch < 0) {
        return rate * qubit(-std::sin(half), e * std::cos(half));
    }
    return rate * qubit(-std::cos(half), -e * std::sin(half));
}

CEEigensystem closed_form_eigensystem(double s, const GateSpec& spec) {
    const auto axes = axis_states(spec.axis);
    const std::size_t nc = spec.control_states();
    CEEigensystem out;
    for (std::size_t m = 0; m < nc; ++m) {
        for (int eps : {+1, -1}) {
            const QuantumState target =
                tensor(QuantumState::basis(nc, m), axes[eps > 0 ? 0 : 1]);
            const double xi = (m == nc - 1 && eps < 0) ? spec.phi : 0.0;
            for (int branch : {-1, +1}) {
                const QuantumState anc = ancilla_eigenstate(xi, s, branch, spec);
                const CVector danc = ancilla_eigenstate_ds(xi, s, branch, spec);
                out.labels.push_back({m, eps, branch, xi});
                out.energies.push_back(branch * spec.omega);
                out.states.push_back(tensor(target, anc));
                CVector d(idx(spec.dim()));
                const CVector& t = target.amplitudes();
                for (Eigen::Index i = 0; i < t.size(); ++i) {
                    d.segment(2 * i, 2) = t(i) * danc;
                }
                out.derivatives.push_back(std::move(d));
            }
        }
    }
    return out;
}

HermitianOperator ground_projector(double s, const GateSpec& spec) {
    return controlled_blocks(spec,
                             HermitianOperator::projector(ancilla_eigenstate(0.0, s, -1, spec)),
                             HermitianOperator::projector(ancilla_eigenstate(spec.phi, s, -1, spec)));
}

QuantumState initial_state(const QuantumState& psi_n, const GateSpec& spec) {
    if (psi_n.dim() != spec.target_dim()) {
        throw DomainError("input register has dimension " + std::to_string(psi_n.dim()) +
                          ", expected " + std::to_string(spec.target_dim()));
    }
    return tensor(psi_n, QuantumState::basis(2, 0));
}

QuantumState rotated_target(const QuantumState& psi_n, const GateSpec& spec) {
    if (psi_n.dim() != spec.target_dim()) {
        throw DomainError("input register has dimension " + std::to_string(psi_n.dim()) +
                          ", expected " + std::to_string(spec.target_dim()));
    }
    const auto axes = axis_states(spec.axis);
    const std::size_t nc = spec.control_states();
    const QuantumState last_minus = tensor(QuantumState::basis(nc, nc - 1), axes[1]);
    const complex gamma = last_minus.inner(psi_n);
    CVector rot = psi_n.amplitudes() + (std::polar(1.0, spec.phi) - 1.0) * gamma * last_minus.amplitudes();
    return QuantumState::normalized(std::move(rot));
}

QuantumState expected_final_state(const QuantumState& psi_n, const GateSpec& spec) {
    const CVector& a = psi_n.amplitudes();
    const QuantumState rotated = rotated_target(psi_n, spec);
    const CVector& r = rotated.amplitudes();
    const double c = std::cos(spec.theta0 / 2.0);
    const double sn = std::sin(spec.theta0 / 2.0);
    CVector out(2 * a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out(2 * i) = c * a(i);
        out(2 * i + 1) = sn * r(i);
    }
    return QuantumState::normalized(std::move(out));
}

double success_probability(const QuantumState& state) {
    if (state.dim() % 2 != 0) {
        throw DomainError("state has no ancilla factor");
    }
    double p = 0.0;
    for (std::size_t i = 1; i < state.dim(); i += 2) {
        p += std::norm(state[i]);
    }
    return p;
}

QuantumState project_ancilla(const QuantumState& state, int outcome) {
    if (state.dim() % 2 != 0 || (outcome != 0 && outcome != 1)) {
        throw DomainError("ancilla projection needs an even dimension and outcome 0 or 1");
    }
    CVector v = state.amplitudes();
    for (std::size_t i = (outcome == 0 ? 1 : 0); i < state.dim(); i += 2) {
        v(idx(i)) = 0.0;
    }
    if (v.norm() == 0.0) {
        throw DegenerateInput("ancilla outcome " + std::to_string(outcome) + " has zero probability");
    }
    return QuantumState::normalized(std::move(v));
}

AncillaMeasurement measure_ancilla(const QuantumState& state, CounterRng& rng) {
    const double p = success_probability(state);
    const int outcome = rng.uniform() < p ? 1 : 0;
    return {outcome, project_ancilla(state, outcome), p};
}

AncillaMeasurement measure_ancilla(const QuantumState& state, std::uint64_t seed) {
    CounterRng rng(seed);
    return measure_ancilla(state, rng);
}

RepeatUntilSuccess run_repeat_until_success(const GateSpec& spec, const QuantumState& psi_n,
                                            std::size_t max_trials, std::uint64_t seed) {
    spec.validate();
    if (max_trials < 1) {
        throw DomainError("max_trials must be at least 1");
    }
    CounterRng rng(seed);
    const QuantumState evolved = expected_final_state(psi_n, spec);
    for (std::size_t trial = 1; trial <= max_trials; ++trial) {
        // every attempt restarts from |psi_n>|0>, so each evolution ends in the same state
        AncillaMeasurement m = measure_ancilla(evolved, rng);
        if (m.outcome == 1) {
            return {trial, false, std::move(m.collapsed), seed};
        }
    }
    return {max_trials, true, initial_state(psi_n, spec), seed};
}

} // namespace stalab::ce
