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
 * Analog unstructured-search Hamiltonians
 *
 *   H0(s) = f (1 - |+><+|) + g (1 - |m><m|) [+ h (|+><m| + |m><+|)]
 *
 * for the linear, local-adiabatic, superenergetic and non-oracular (NLNO)
 * schedules, together with their closed-form spectra, eigenvector
 * derivatives and the counter-diabatic correction.
 *
 * Everything that moves lives in the two-dimensional invariant subspace
 * spanned by |m> and |phi^> = sum_{i != m} |i> / sqrt(N-1); the remaining
 * N-2 levels are degenerate at f+g with time-independent eigenvectors.
 * Closed forms are evaluated from the 2x2 block in that basis, which stays
 * finite at the endpoints and at the NLNO point f = h sqrt(N).
 */

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stalab/qcore.hpp"

namespace stalab::grover {

enum class ScheduleKind { linear, local_adiabatic, superenergetic, nlno, custom };

std::string_view to_string(ScheduleKind kind);
/// Throws DomainError for an unknown name.
ScheduleKind parse_schedule(std::string_view name);

struct ScheduleValues {
    double f, g, h;
    double df, dg, dh;
};

/// User-supplied interpolation. Derivatives are optional; operations that need
/// them throw UnsupportedSchedule when they are missing.
struct CustomSchedule {
    std::function<double(double)> f, g, h;
    std::function<double(double)> df, dg, dh;

    bool has_derivatives() const { return df && dg && dh; }
};

struct GroverProblem {
    std::size_t N = 4;
    std::size_t marked = 0;
    ScheduleKind schedule = ScheduleKind::linear;
    double tau = 1.0;
    std::optional<CustomSchedule> custom;

    void validate() const;
};

ScheduleValues schedule_at(ScheduleKind kind, double s, std::size_t N);
/// Evaluates the problem's schedule, including custom ones.
ScheduleValues schedule_at(const GroverProblem& problem, double s);

enum class Branch { minus, plus };

struct GroverSpectrum {
    double E_minus, E_plus, E_deg;
    /// Coefficient of the unnormalized sum over unmarked states; +-inf where
    /// the eigenvector has no |m> component (NLNO at s = 1/sqrt(N)).
    double b_minus, b_plus;
    double db_minus, db_plus; ///< d/ds of b
    double mu_minus, mu_plus; ///< <dE|dE> - |<E|dE>|^2, s-derivatives
    double gap;               ///< E_plus - E_minus
    bool degenerate;          ///< gap below 1e-12: branch labels are ambiguous here
};

HermitianOperator build_grover_h(const GroverProblem& problem, double s);

GroverSpectrum spectrum_closed_form(const GroverProblem& problem, double s);

/// Normalized eigenvector with <m|E> >= 0.
QuantumState eigvec_closed_form(const GroverProblem& problem, double s, Branch branch);

/// d/ds of eigvec_closed_form (not normalized).
CVector eigvec_derivative(const GroverProblem& problem, double s, Branch branch);

std::pair<double, double> mu_grover(const GroverProblem& problem, double s);

/// Orthonormal, time-independent basis of the (N-2)-fold degenerate level.
std::vector<QuantumState> degenerate_basis(const GroverProblem& problem);

/// i/tau sum_{+-} |dE/ds><E|.
HermitianOperator build_grover_cd(const GroverProblem& problem, double s);

HermitianOperator build_grover_sa(const GroverProblem& problem, double s);

enum class OracleKind { oracular, nonoracular };

/// O_m|i> or Obar_m|i>; O_m|m> is the zero vector.
CVector oracle_action(OracleKind kind, const GroverProblem& problem, std::size_t i);

/// |+>
QuantumState uniform_state(std::size_t N);

// Reduced two-level description in the basis {|m>, |phi^>}.

/// 2x2 block of H0 (plus the counter-diabatic term when @p with_cd).
HermitianOperator reduced_hamiltonian(const GroverProblem& problem, double s, bool with_cd);
/// |+> expressed in {|m>, |phi^>}.
QuantumState reduced_uniform_state(std::size_t N);
/// Maps a reduced 2-vector back to the N-dimensional space.
CVector embed_reduced(const GroverProblem& problem, const CVector& reduced);

/// Mixing coefficient (N' f + 2h/sqrt(N) - E) / (N' (f - h sqrt(N))), N' = 1 - 1/N,
/// evaluated without the fallback used by spectrum_closed_form. Meant for cross-checks;
/// singular where f = h sqrt(N).
double b_direct(const GroverProblem& problem, double s, double energy);

} // namespace stalab::grover
