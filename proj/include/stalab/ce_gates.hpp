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
 * Controlled-evolution gate model. An n-controlled rotation of the last
 * target qubit is driven through an auxiliary qubit whose two-level
 * Hamiltonian sweeps from -omega*sigma_z toward a tilted axis.
 *
 * Basis ordering of the composite space: the n+1 target qubits in the
 * computational basis (control qubits are the high bits, the rotated qubit
 * the lowest), then the ancilla, so that index = target_index * 2 + ancilla.
 * Dimensions: N = 2^n control states, 2N target states, D = 4N overall.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "stalab/qcore.hpp"
#include "stalab/rng.hpp"

namespace stalab::ce {

inline constexpr int kMaxControls = 8;

struct GateSpec {
    int n = 0;                              ///< control-qubit count
    double phi = 0.0;                       ///< rotation angle
    std::array<double, 3> axis{0, 0, 1};    ///< rotation axis, unit length
    double theta0 = 3.141592653589793;      ///< sweep angle in (0, pi]
    double omega = 1.0;                     ///< energy scale (hbar = 1)
    double tau = 1.0;                       ///< total evolution time

    /// Throws DomainError when any field is out of range.
    void validate() const;

    std::size_t control_states() const { return std::size_t{1} << n; }
    std::size_t target_dim() const { return std::size_t{2} << n; }
    std::size_t dim() const { return std::size_t{4} << n; }
};

/// Two-level Hamiltonian -omega[sigma_z cos(theta0 s) + sin(theta0 s)(sigma_x cos xi + sigma_y sin xi)].
HermitianOperator build_h_xi(double xi, double s, const GateSpec& spec);

/// Time-independent correction theta0/(2 tau) (sigma_y cos xi - sigma_x sin xi).
HermitianOperator build_cd_term(double xi, const GateSpec& spec);

/// |n+> and |n-> for the rotation axis (eigenstates of n.sigma with +1, -1).
std::array<QuantumState, 2> axis_states(const std::array<double, 3>& axis);

/// P = |N-1><N-1| (x) |n-><n-| on the target register.
HermitianOperator target_projector(const GateSpec& spec);

/// (1 - P) (x) A0 + P (x) Aphi for 2x2 blocks A0, Aphi.
HermitianOperator controlled_blocks(const GateSpec& spec, const HermitianOperator& block0,
                                    const HermitianOperator& block_phi);

HermitianOperator build_ce_hamiltonian(double s, const GateSpec& spec);
/// Counter-diabatic part of the full model (block sum of build_cd_term).
HermitianOperator build_ce_cd(const GateSpec& spec);
HermitianOperator build_superadiabatic_ce(double s, const GateSpec& spec);

/// Ancilla eigenstate of H_xi(s): branch -1 is the ground state (energy -omega).
QuantumState ancilla_eigenstate(double xi, double s, int branch, const GateSpec& spec);
/// d/ds of ancilla_eigenstate.
CVector ancilla_eigenstate_ds(double xi, double s, int branch, const GateSpec& spec);

struct CELabel {
    std::size_t control; ///< control-register value m in [0, N)
    int epsilon;         ///< +1 for |n+>, -1 for |n->
    int branch;          ///< +1 excited, -1 ground
    double xi;           ///< 0 or phi, fixed by (control, epsilon)
};

struct CEEigensystem {
    std::vector<CELabel> labels;
    std::vector<double> energies;      ///< branch * omega
    std::vector<QuantumState> states;  ///< |control, n_eps> (x) |E_xi^branch(s)>
    std::vector<CVector> derivatives;  ///< d/ds of states
};

/// Closed-form eigenbasis of build_ce_hamiltonian at s.
CEEigensystem closed_form_eigensystem(double s, const GateSpec& spec);

/// Projector onto the 2N-fold degenerate ground space at s.
HermitianOperator ground_projector(double s, const GateSpec& spec);

/// Input register state |psi_n> (x) |0>.
QuantumState initial_state(const QuantumState& psi_n, const GateSpec& spec);

/// |psi_n> with the phase e^{i phi} applied to its |N-1, n-> component.
QuantumState rotated_target(const QuantumState& psi_n, const GateSpec& spec);

/// cos(theta0/2)|psi_n>|0> + sin(theta0/2)|psi_n^rot>|1>.
QuantumState expected_final_state(const QuantumState& psi_n, const GateSpec& spec);

/// Probability that the ancilla reads |1>.
double success_probability(const QuantumState& state);

/// Projects the ancilla onto @p outcome and renormalizes. Throws DegenerateInput
/// when that branch has zero weight.
QuantumState project_ancilla(const QuantumState& state, int outcome);

struct AncillaMeasurement {
    int outcome;
    QuantumState collapsed;
    double p_success;
};

AncillaMeasurement measure_ancilla(const QuantumState& state, CounterRng& rng);
AncillaMeasurement measure_ancilla(const QuantumState& state, std::uint64_t seed);

struct RepeatUntilSuccess {
    std::size_t trials;   ///< evolutions performed, including the successful one
    bool truncated;       ///< true when max_trials ran out without success
    QuantumState final_state;
    std::uint64_t seed;
};

/// Restart protocol: evolve, measure the ancilla, start again from
/// |psi_n>|0> on outcome 0. Trial counts are geometric with mean 1/sin^2(theta0/2).
RepeatUntilSuccess run_repeat_until_success(const GateSpec& spec, const QuantumState& psi_n,
                                            std::size_t max_trials, std::uint64_t seed);

} // namespace stalab::ce
