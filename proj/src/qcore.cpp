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

#include "stalab/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stalab/errors.hpp"

namespace stalab {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

} // namespace

QuantumState QuantumState::normalized(CVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DegenerateInput("cannot normalize a zero or non-finite state vector");
    }
    amplitudes /= norm;
    return QuantumState(std::move(amplitudes));
}

QuantumState QuantumState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DomainError("basis index " + std::to_string(index) + " out of range for dimension " +
                          std::to_string(dim));
    }
    CVector v = CVector::Zero(idx(dim));
    v(idx(index)) = 1.0;
    return QuantumState(std::move(v));
}

complex QuantumState::inner(const QuantumState& other) const {
    if (other.dim() != dim()) {
        throw DomainError("inner product of states with different dimensions");
    }
    return amps_.dot(other.amps_); // Eigen conjugates the left operand
}

double hermiticity_defect(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        return INFINITY;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(CMatrix entries) {
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
        throw DomainError("Hermitian operator needs a non-empty square matrix");
    }
    if (!entries.allFinite()) {
        throw NumericalFailure("operator has non-finite entries");
    }
    const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
    const double defect = hermiticity_defect(entries);
    if (defect > kHermitianTol * scale) {
        throw DomainError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    m_ = 0.5 * (entries + entries.adjoint());
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
    return HermitianOperator(CMatrix::Identity(idx(dim), idx(dim)), Trusted{});
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
    return HermitianOperator(CMatrix::Zero(idx(dim), idx(dim)), Trusted{});
}

HermitianOperator HermitianOperator::projector(const QuantumState& v) {
    const CVector& a = v.amplitudes();
    CMatrix p = a * a.adjoint();
    p = 0.5 * (p + p.adjoint()).eval();
    return HermitianOperator(std::move(p), Trusted{});
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& rhs) const {
    if (rhs.dim() != dim()) {
        throw DomainError("operator dimension mismatch in sum");
    }
    return HermitianOperator(m_ + rhs.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& rhs) const {
    if (rhs.dim() != dim()) {
        throw DomainError("operator dimension mismatch in difference");
    }
    return HermitianOperator(m_ - rhs.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator*(double scale) const {
    return HermitianOperator(m_ * scale, Trusted{});
}

UnitaryOperator::UnitaryOperator(CMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) {
        throw DomainError("unitary operator needs a square matrix");
    }
    const CMatrix gram = m_.adjoint() * m_;
    const double dev = (gram - CMatrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
    if (!(dev <= kUnitaryTol)) {
        throw NumericalFailure("matrix is not unitary (deviation " + std::to_string(dev) + ")");
    }
}

QuantumState UnitaryOperator::apply(const QuantumState& v) const {
    if (v.dim() != dim()) {
        throw DomainError("state dimension does not match operator");
    }
    return QuantumState::normalized(m_ * v.amplitudes());
}

HermitianOperator pauli_x() {
    CMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return HermitianOperator(std::move(m));
}

HermitianOperator pauli_y() {
    CMatrix m(2, 2);
    m << 0.0, complex(0.0, -1.0), complex(0.0, 1.0), 0.0;
    return HermitianOperator(std::move(m));
}

HermitianOperator pauli_z() {
    CMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return HermitianOperator(std::move(m));
}

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
    return HermitianOperator(kron(a.matrix(), b.matrix()));
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
    const CVector& x = a.amplitudes();
    const CVector& y = b.amplitudes();
    CVector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out.segment(i * y.size(), y.size()) = x(i) * y;
    }
    return QuantumState::normalized(std::move(out));
}

double frobenius_norm(const HermitianOperator& a) {
    return a.matrix().norm();
}

double spectral_norm(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("eigenvalue solver failed in spectral_norm");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Eigensystem eig_hermitian(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("Hermitian eigendecomposition did not converge");
    }
    Eigensystem out;
    const auto& vals = solver.eigenvalues();
    out.values.assign(vals.data(), vals.data() + vals.size());
    out.basis = solver.eigenvectors();
    out.vectors.reserve(out.values.size());
    for (Eigen::Index k = 0; k < out.basis.cols(); ++k) {
        out.vectors.push_back(QuantumState::normalized(out.basis.col(k)));
    }
    return out;
}

UnitaryOperator expm_step(const HermitianOperator& a, double dt) {
    if (!std::isfinite(dt)) {
        throw DomainError("expm_step needs a finite time step");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("Hermitian eigendecomposition did not converge");
    }
    const CMatrix& v = solver.eigenvectors();
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    CVector phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        phases(k) = std::polar(1.0, -lambda(k) * dt);
    }
    return UnitaryOperator(v * phases.asDiagonal() * v.adjoint());
}

double anticommutator_trace(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) {
        throw DomainError("operator dimension mismatch in anticommutator");
    }
    // Tr[AB] = sum_ij A_ij B_ji
    return 2.0 * (a.matrix().cwiseProduct(b.matrix().transpose())).sum().real();
}

double fidelity(const QuantumState& a, const QuantumState& b) {
    return std::norm(a.inner(b));
}

CounterDiabaticTerm counter_diabatic(std::span<const QuantumState> states,
                                     std::span<const CVector> derivatives, double tau) {
    if (states.empty() || states.size() != derivatives.size()) {
        throw DomainError("counter_diabatic needs one derivative per eigenstate");
    }
    if (!(tau > 0.0)) {
        throw DomainError("total time must be positive");
    }
    const Eigen::Index dim = static_cast<Eigen::Index>(states.front().dim());
    CMatrix raw = CMatrix::Zero(dim, dim);
    CMatrix correction = CMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < states.size(); ++k) {
        const CVector& n = states[k].amplitudes();
        const CVector& dn = derivatives[k];
        if (n.size() != dim || dn.size() != dim) {
            throw DomainError("eigenframe dimensions are inconsistent");
        }
        raw += dn * n.adjoint();
        correction += n.dot(dn) * (n * n.adjoint());
    }
    const complex prefactor(0.0, 1.0 / tau);
    return {HermitianOperator(prefactor * (raw - correction)), correction.norm()};
}

} // namespace stalab
