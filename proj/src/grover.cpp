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

#include "stalab/grover.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>

#include "stalab/errors.hpp"

namespace stalab::grover {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

constexpr double kDegenerateGap = 1e-12;
constexpr double kDirectDenominator = 1e-8;
constexpr double kCrossingOffset = 1e-7;

// 2x2 block [[A, B], [B, C]] in {|m>, |phi^>} and its s-derivative.
struct Block {
    double A, B, C;
    double dA, dB, dC;
    double T, R, det;
    double alpha;     // half-angle: excited = (cos a, sin a), ground = (-sin a, cos a)
    double alpha_dot; // d alpha / ds, equal to the rotation rate of both branches
    bool degenerate;
};

Block raw_block(std::size_t N, const ScheduleValues& v) {
    const double nd = static_cast<double>(N);
    const double rn = std::sqrt(nd);
    const double nbar = 1.0 - 1.0 / nd;
    const double c = std::sqrt(nbar);
    Block b{};
    b.A = v.f * nbar + 2.0 * v.h / rn;
    b.C = v.f / nd + v.g;
    b.B = c * (v.h - v.f / rn);
    b.dA = v.df * nbar + 2.0 * v.dh / rn;
    b.dC = v.df / nd + v.dg;
    b.dB = c * (v.dh - v.df / rn);
    b.T = v.f + v.g + 2.0 * v.h / rn;
    const double X = 0.5 * (b.A - b.C);
    b.R = std::hypot(X, b.B);
    b.det = v.f * v.g * nbar + 2.0 * v.h * (v.f + v.g) / rn - nbar * v.h * v.h;
    b.degenerate = 2.0 * b.R < kDegenerateGap * std::max(1.0, std::abs(b.T));
    b.alpha = 0.5 * std::atan2(b.B, X);
    const double dX = 0.5 * (b.dA - b.dC);
    b.alpha_dot = b.degenerate ? 0.0 : 0.5 * (X * b.dB - b.B * dX) / (b.R * b.R);
    return b;
}

bool has_derivatives(const GroverProblem& p) {
    return p.schedule != ScheduleKind::custom || (p.custom && p.custom->has_derivatives());
}

Block block_at(const GroverProblem& p, double s) {
    Block b = raw_block(p.N, schedule_at(p, s));
    if (b.degenerate) {
        // Exact level crossing: eigenvectors and their rotation rate are taken as
        // the one-sided limit, which is smooth for the schedules here.
        const double s2 = s - kCrossingOffset >= 0.0 ? s - kCrossingOffset : s + kCrossingOffset;
        const Block near = raw_block(p.N, schedule_at(p, s2));
        b.alpha = near.alpha;
        b.alpha_dot = near.alpha_dot;
    }
    return b;
}

std::pair<double, double> energies(const Block& b) {
    const double half = 0.5 * b.T;
    // rationalize whichever root suffers cancellation
    if (half >= 0.0) {
        const double hi = half + b.R;
        return {hi > 0.0 ? b.det / hi : 0.0, hi};
    }
    const double lo = half - b.R;
    return {lo, lo < 0.0 ? b.det / lo : 0.0};
}

// Gauge-fixed reduced eigenvector and its derivative.
struct ReducedVec {
    double m, p;   // components on |m>, |phi^>
    double dm, dp; // s-derivatives
};

ReducedVec reduced_vec(const Block& b, Branch br) {
    const double ca = std::cos(b.alpha);
    const double sa = std::sin(b.alpha);
    ReducedVec v{};
    if (br == Branch::plus) {
        v = {ca, sa, -sa * b.alpha_dot, ca * b.alpha_dot};
    } else {
        v = {-sa, ca, -ca * b.alpha_dot, -sa * b.alpha_dot};
    }
    if (v.m < 0.0 || (v.m == 0.0 && v.p < 0.0)) {
        v = {-v.m, -v.p, -v.dm, -v.dp};
    }
    return v;
}

CVector phi_hat(const GroverProblem& p) {
    CVector v = CVector::Constant(idx(p.N), 1.0 / std::sqrt(static_cast<double>(p.N - 1)));
    v(idx(p.marked)) = 0.0;
    return v;
}

double b_from_vec(const ReducedVec& v, std::size_t N) {
    const double rn1 = std::sqrt(static_cast<double>(N - 1));
    if (v.m == 0.0) {
        return std::copysign(std::numeric_limits<double>::infinity(), v.p);
    }
    return v.p / (v.m * rn1);
}

double db_from_vec(const ReducedVec& v, std::size_t N) {
    const double rn1 = std::sqrt(static_cast<double>(N - 1));
    if (v.m == 0.0) {
        return std::copysign(std::numeric_limits<double>::infinity(), v.dm == 0.0 ? v.p : -v.dm * v.p);
    }
    return (v.dp * v.m - v.p * v.dm) / (v.m * v.m * rn1);
}

} // namespace

std::string_view to_string(ScheduleKind kind) {
    switch (kind) {
    case ScheduleKind::linear: return "linear";
    case ScheduleKind::local_adiabatic: return "local_adiabatic";
    case ScheduleKind::superenergetic: return "superenergetic";
    case ScheduleKind::nlno: return "nlno";
    case ScheduleKind::custom: return "custom";
    }
    return "unknown";
}

ScheduleKind parse_schedule(std::string_view name) {
    for (auto k : {ScheduleKind::linear, ScheduleKind::local_adiabatic, ScheduleKind::superenergetic,
                   ScheduleKind::nlno}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw DomainError("unknown schedule '" + std::string(name) + "'");
}

void GroverProblem::validate() const {
    if (N < 2) {
        throw DomainError("list size N must be at least 2");
    }
    if (marked >= N) {
        throw DomainError("marked index must be below N");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw DomainError("tau must be positive");
    }
    if (schedule == ScheduleKind::custom && (!custom || !custom->f || !custom->g || !custom->h)) {
        throw DomainError("custom schedule needs f, g and h");
    }
}

ScheduleValues schedule_at(ScheduleKind kind, double s, std::size_t N) {
    const double nd = static_cast<double>(N);
    switch (kind) {
    case ScheduleKind::linear:
        return {1.0 - s, s, 0.0, -1.0, 1.0, 0.0};
    case ScheduleKind::local_adiabatic: {
        const double r = std::sqrt(nd - 1.0);
        const double a = std::atan(r);
        const double t = std::tan(a * (1.0 - 2.0 * s));
        const double g = (r - t) / (2.0 * r);
        const double dg = a * (1.0 + t * t) / r;
        return {1.0 - g, g, 0.0, -dg, dg, 0.0};
    }
    case ScheduleKind::superenergetic: {
        const double rn = std::sqrt(nd);
        const double bump = rn * (1.0 - s) * s;
        const double dbump = rn * (1.0 - 2.0 * s);
        return {1.0 - s + bump, s + bump, 0.0, -1.0 + dbump, 1.0 + dbump, 0.0};
    }
    case ScheduleKind::nlno:
        return {1.0 - s, s, s * (1.0 - s), -1.0, 1.0, 1.0 - 2.0 * s};
    case ScheduleKind::custom:
        break;
    }
    throw UnsupportedSchedule("custom schedules must be evaluated through their GroverProblem");
}

ScheduleValues schedule_at(const GroverProblem& problem, double s) {
    if (problem.schedule != ScheduleKind::custom) {
        return schedule_at(problem.schedule, s, problem.N);
    }
    const CustomSchedule& c = *problem.custom;
    ScheduleValues v{c.f(s), c.g(s), c.h(s), NAN, NAN, NAN};
    if (c.has_derivatives()) {
        v.df = c.df(s);
        v.dg = c.dg(s);
        v.dh = c.dh(s);
    }
    return v;
}

QuantumState uniform_state(std::size_t N) {
    return QuantumState::normalized(CVector::Constant(idx(N), 1.0));
}

HermitianOperator build_grover_h(const GroverProblem& problem, double s) {
    problem.validate();
    const ScheduleValues v = schedule_at(problem, s);
    const Eigen::Index n = idx(problem.N);
    const Eigen::Index m = idx(problem.marked);
    const double nd = static_cast<double>(problem.N);
    // |+><+| has every entry 1/N
    CMatrix h = CMatrix::Constant(n, n, -v.f / nd);
    h.diagonal().array() += v.f + v.g;
    h(m, m) -= v.g;
    if (v.h != 0.0) {
        const double w = v.h / std::sqrt(nd);
        h.row(m).array() += w;
        h.col(m).array() += w;
    }
    return HermitianOperator(std::move(h));
}

GroverSpectrum spectrum_closed_form(const GroverProblem& problem, double s) {
    problem.validate();
    const ScheduleValues v = schedule_at(problem, s);
    const Block b = block_at(problem, s);
    GroverSpectrum out{};
    std::tie(out.E_minus, out.E_plus) = energies(b);
    out.E_deg = v.f + v.g;
    out.gap = 2.0 * b.R;
    out.degenerate = b.degenerate;

    const ReducedVec vm = reduced_vec(b, Branch::minus);
    const ReducedVec vp = reduced_vec(b, Branch::plus);
    const double nd = static_cast<double>(problem.N);
    const double denom = (1.0 - 1.0 / nd) * (v.f - v.h * std::sqrt(nd));
    if (std::abs(denom) >= kDirectDenominator) {
        out.b_minus = b_direct(problem, s, out.E_minus);
        out.b_plus = b_direct(problem, s, out.E_plus);
    } else {
        out.b_minus = b_from_vec(vm, problem.N);
        out.b_plus = b_from_vec(vp, problem.N);
    }
    if (has_derivatives(problem)) {
        out.db_minus = db_from_vec(vm, problem.N);
        out.db_plus = db_from_vec(vp, problem.N);
        out.mu_minus = out.mu_plus = b.alpha_dot * b.alpha_dot;
    } else {
        out.db_minus = out.db_plus = out.mu_minus = out.mu_plus = NAN;
    }
    return out;
}

double b_direct(const GroverProblem& problem, double s, double energy) {
    const ScheduleValues v = schedule_at(problem, s);
    const double nd = static_cast<double>(problem.N);
    const double nbar = 1.0 - 1.0 / nd;
    return (nbar * v.f + 2.0 * v.h / std::sqrt(nd) - energy) / (nbar * (v.f - v.h * std::sqrt(nd)));
}

QuantumState eigvec_closed_form(const GroverProblem& problem, double s, Branch branch) {
    problem.validate();
    const ReducedVec v = reduced_vec(block_at(problem, s), branch);
    CVector out = v.p * phi_hat(problem);
    out(idx(problem.marked)) = v.m;
    return QuantumState::normalized(std::move(out));
}

CVector eigvec_derivative(const GroverProblem& problem, double s, Branch branch) {
    problem.validate();
    if (!has_derivatives(problem)) {
        throw UnsupportedSchedule("schedule has no analytic derivatives");
    }
    const ReducedVec v = reduced_vec(block_at(problem, s), branch);
    CVector out = v.dp * phi_hat(problem);
    out(idx(problem.marked)) = v.dm;
    return out;
}

std::pair<double, double> mu_grover(const GroverProblem& problem, double s) {
    const GroverSpectrum sp = spectrum_closed_form(problem, s);
    if (!has_derivatives(problem)) {
        throw UnsupportedSchedule("schedule has no analytic derivatives");
    }
    return {sp.mu_minus, sp.mu_plus};
}

std::vector<QuantumState> degenerate_basis(const GroverProblem& problem) {
    problem.validate();
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < problem.N; ++i) {
        if (i != problem.marked) {
            rest.push_back(i);
        }
    }
    // Helmert vectors over the unmarked indices: zero sum, zero weight on |m>.
    std::vector<QuantumState> out;
    for (std::size_t k = 1; k < rest.size(); ++k) {
        CVector v = CVector::Zero(idx(problem.N));
        for (std::size_t i = 0; i < k; ++i) {
            v(idx(rest[i])) = 1.0;
        }
        v(idx(rest[k])) = -static_cast<double>(k);
        out.push_back(QuantumState::normalized(std::move(v)));
    }
    return out;
}

HermitianOperator build_grover_cd(const GroverProblem& problem, double s) {
    const std::array<QuantumState, 2> states{eigvec_closed_form(problem, s, Branch::minus),
                                             eigvec_closed_form(problem, s, Branch::plus)};
    const std::array<CVector, 2> derivs{eigvec_derivative(problem, s, Branch::minus),
                                        eigvec_derivative(problem, s, Branch::plus)};
    return counter_diabatic(states, derivs, problem.tau).h_cd;
}

HermitianOperator build_grover_sa(const GroverProblem& problem, double s) {
    return build_grover_h(problem, s) + build_grover_cd(problem, s);
}

CVector oracle_action(OracleKind kind, const GroverProblem& problem, std::size_t i) {
    problem.validate();
    if (i >= problem.N) {
        throw DomainError("basis index out of range");
    }
    const Eigen::Index m = idx(problem.marked);
    CVector out = CVector::Zero(idx(problem.N));
    if (kind == OracleKind::oracular) {
        if (i != problem.marked) {
            out(idx(i)) = 1.0;
        }
        return out;
    }
    const double rn = std::sqrt(static_cast<double>(problem.N));
    if (i == problem.marked) {
        out = uniform_state(problem.N).amplitudes();
    }
    out(m) += 1.0 / rn;
    return out;
}

HermitianOperator reduced_hamiltonian(const GroverProblem& problem, double s, bool with_cd) {
    problem.validate();
    const Block b = block_at(problem, s);
    CMatrix h(2, 2);
    h << b.A, b.B, b.B, b.C;
    if (with_cd) {
        if (!has_derivatives(problem)) {
            throw UnsupportedSchedule("schedule has no analytic derivatives");
        }
        // (alpha_dot / tau) sigma_y
        const double w = b.alpha_dot / problem.tau;
        h(0, 1) += complex(0.0, -w);
        h(1, 0) += complex(0.0, w);
    }
    return HermitianOperator(std::move(h));
}

QuantumState reduced_uniform_state(std::size_t N) {
    const double nd = static_cast<double>(N);
    CVector v(2);
    v << 1.0 / std::sqrt(nd), std::sqrt(1.0 - 1.0 / nd);
    return QuantumState::normalized(std::move(v));
}

CVector embed_reduced(const GroverProblem& problem, const CVector& reduced) {
    if (reduced.size() != 2) {
        throw DomainError("reduced vector must have two components");
    }
    CVector out = reduced(1) * phi_hat(problem);
    out(idx(problem.marked)) = reduced(0);
    return out;
}

} // namespace stalab::grover
