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
 * Dense complex linear-algebra substrate: normalized state vectors,
 * Hermitian and unitary operators, Kronecker products, operator norms,
 * Hermitian eigendecomposition and the exponential propagator step.
 *
 * All quantities are in natural units (hbar = 1).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace stalab {

using complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Unit-norm complex amplitude vector.
class QuantumState {
public:
    /// Rescales @p amplitudes to unit norm. Throws DegenerateInput on a zero vector.
    static QuantumState normalized(CVector amplitudes);
    /// Computational basis vector |index> of dimension @p dim.
    static QuantumState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
    const CVector& amplitudes() const noexcept { return amps_; }
    complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

    /// <this|other>
    complex inner(const QuantumState& other) const;

private:
    explicit QuantumState(CVector amps) : amps_(std::move(amps)) {}
    CVector amps_;
};

/// Dense Hermitian matrix. The constructor rejects inputs that deviate from
/// Hermiticity by more than 1e-12 (scaled by the largest entry) and stores the
/// exactly Hermitian part.
class HermitianOperator {
public:
    explicit HermitianOperator(CMatrix entries);

    static HermitianOperator identity(std::size_t dim);
    static HermitianOperator zero(std::size_t dim);
    /// |v><v|
    static HermitianOperator projector(const QuantumState& v);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const noexcept { return m_; }
    complex operator()(std::size_t i, std::size_t j) const {
        return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

    double trace() const { return m_.trace().real(); }
    CVector apply(const CVector& v) const { return m_ * v; }

    HermitianOperator operator+(const HermitianOperator& rhs) const;
    HermitianOperator operator-(const HermitianOperator& rhs) const;
    HermitianOperator operator*(double scale) const;

private:
    struct Trusted {};
    HermitianOperator(CMatrix entries, Trusted) : m_(std::move(entries)) {}
    CMatrix m_;
};

inline HermitianOperator operator*(double scale, const HermitianOperator& op) { return op * scale; }

/// Dense unitary matrix, checked to satisfy U^dagger U = 1 within 1e-10.
class UnitaryOperator {
public:
    explicit UnitaryOperator(CMatrix entries);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const noexcept { return m_; }
    CVector apply(const CVector& v) const { return m_ * v; }
    QuantumState apply(const QuantumState& v) const;

private:
    CMatrix m_;
};

struct Eigensystem {
    std::vector<double> values;        // ascending
    std::vector<QuantumState> vectors; // vectors[k] belongs to values[k]
    CMatrix basis;                     // same vectors as columns
};

// Pauli matrices and the 2x2 identity.
HermitianOperator pauli_x();
HermitianOperator pauli_y();
HermitianOperator pauli_z();

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);
QuantumState tensor(const QuantumState& a, const QuantumState& b);

double frobenius_norm(const HermitianOperator& a);
double spectral_norm(const HermitianOperator& a);

/// Eigenvalues in ascending order with an orthonormal eigenbasis.
/// Throws NumericalFailure if the solver does not converge.
Eigensystem eig_hermitian(const HermitianOperator& a);

/// exp(-i A dt) built from the eigendecomposition of A.
UnitaryOperator expm_step(const HermitianOperator& a, double dt);

/// Tr[{A, B}] = 2 Re Tr[AB]
double anticommutator_trace(const HermitianOperator& a, const HermitianOperator& b);

/// Largest |A_ij - conj(A_ji)|.
double hermiticity_defect(const CMatrix& a);

/// |<a|b>|^2
double fidelity(const QuantumState& a, const QuantumState& b);

/// Result of assembling a transitionless-driving correction from an eigenframe.
struct CounterDiabaticTerm {
    HermitianOperator h_cd;
    /// Frobenius norm of the sum of <n|dn> |n><n| terms that were subtracted.
    double phase_correction_norm;
};

/**
 * Builds i/tau * sum_n (|dn><n| - <n|dn> |n><n|) from eigenstates |n(s)> and
 * their s-derivatives. The states must span a subspace that is closed under
 * the derivative, otherwise the result is not Hermitian and construction throws.
 */
CounterDiabaticTerm counter_diabatic(std::span<const QuantumState> states,
                                     std::span<const CVector> derivatives, double tau);

} // namespace stalab
