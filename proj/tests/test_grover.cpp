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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "stalab/errors.hpp"
#include "stalab/grover.hpp"
#include "support/oracles.hpp"

using namespace stalab;
using namespace stalab::grover;
using stalab::testing::dense_eigenvalues;

namespace {

const ScheduleKind kKinds[] = {ScheduleKind::linear, ScheduleKind::local_adiabatic,
                               ScheduleKind::superenergetic, ScheduleKind::nlno};

GroverProblem make(std::size_t N, ScheduleKind kind, std::size_t marked = 0, double tau = 1.0) {
    GroverProblem p;
    p.N = N;
    p.schedule = kind;
    p.marked = marked;
    p.tau = tau;
    return p;
}

std::vector<double> closed_levels(const GroverProblem& p, double s) {
    const auto sp = spectrum_closed_form(p, s);
    std::vector<double> v{sp.E_minus, sp.E_plus};
    v.insert(v.end(), p.N - 2, sp.E_deg);
    std::sort(v.begin(), v.end());
    return v;
}

bool near_crossing(const GroverProblem& p, double s) {
    return spectrum_closed_form(p, s).gap < 1e-3;
}

} // namespace

TEST_CASE("schedule parsing") {
    for (auto k : kKinds) {
        CHECK(parse_schedule(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_schedule("cubic"), DomainError);
}

TEST_CASE("schedule values") {
    for (std::size_t N : {4, 64}) {
        CHECK(schedule_at(ScheduleKind::local_adiabatic, 0.5, N).g == doctest::Approx(0.5).epsilon(1e-15));
    }
    const auto se = schedule_at(ScheduleKind::superenergetic, 0.5, 16);
    CHECK(se.f == doctest::Approx(1.5));
    CHECK(se.g == doctest::Approx(1.5));
    const auto nl = schedule_at(ScheduleKind::nlno, 0.5, 8);
    CHECK(nl.f == doctest::Approx(0.5));
    CHECK(nl.g == doctest::Approx(0.5));
    CHECK(nl.h == doctest::Approx(0.25));
}

TEST_CASE("schedule boundary conditions") {
    for (auto k : kKinds) {
        for (std::size_t N : {2, 16, 1024}) {
            const auto a = schedule_at(k, 0.0, N);
            const auto b = schedule_at(k, 1.0, N);
            CHECK(a.f == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(std::abs(a.g) < 1e-14);
            CHECK(std::abs(b.f) < 1e-14);
            CHECK(b.g == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(std::abs(a.h) < 1e-14);
            CHECK(std::abs(b.h) < 1e-14);
            if (k != ScheduleKind::nlno) {
                CHECK(schedule_at(k, 0.37, N).h == 0.0);
            }
        }
    }
}

TEST_CASE("schedule derivatives match finite differences") {
    const double h = 1e-6;
    for (auto k : kKinds) {
        for (double s : {0.1, 0.5, 0.83}) {
            const auto v = schedule_at(k, s, 32);
            const auto up = schedule_at(k, s + h, 32);
            const auto dn = schedule_at(k, s - h, 32);
            CHECK(v.df == doctest::Approx((up.f - dn.f) / (2 * h)).epsilon(1e-7));
            CHECK(v.dg == doctest::Approx((up.g - dn.g) / (2 * h)).epsilon(1e-7));
            CHECK(v.dh == doctest::Approx((up.h - dn.h) / (2 * h)).epsilon(1e-7));
        }
    }
}

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(make(1, ScheduleKind::linear).validate(), DomainError);
    CHECK_THROWS_AS(make(4, ScheduleKind::linear, 4).validate(), DomainError);
    CHECK_THROWS_AS(make(4, ScheduleKind::linear, 0, 0.0).validate(), DomainError);
}

TEST_CASE("search Hamiltonian endpoints") {
    for (auto k : kKinds) {
        const auto p = make(8, k, 3);
        const auto e0 = dense_eigenvalues(build_grover_h(p, 0.0).matrix());
        CHECK(std::abs(e0[0]) < 1e-12);
        for (std::size_t i = 1; i < 8; ++i) {
            CHECK(e0[i] == doctest::Approx(1.0).epsilon(1e-12));
        }
        const auto h1 = build_grover_h(p, 1.0);
        const CVector m = QuantumState::basis(8, 3).amplitudes();
        CHECK(h1.apply(m).norm() < 1e-12);
    }
    const auto e = dense_eigenvalues(build_grover_h(make(4, ScheduleKind::linear), 0.5).matrix());
    CHECK(e[1] - e[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("closed-form spectrum values") {
    const auto z = spectrum_closed_form(make(16, ScheduleKind::linear), 0.0);
    CHECK(std::abs(z.E_minus) < 1e-15);
    CHECK(z.E_plus == doctest::Approx(1.0));
    CHECK(z.E_deg == doctest::Approx(1.0));

    const auto se = spectrum_closed_form(make(16, ScheduleKind::superenergetic), 0.5);
    CHECK(se.E_minus == doctest::Approx(1.125).epsilon(1e-14));
    CHECK(se.E_plus == doctest::Approx(1.875).epsilon(1e-14));

    const auto p = make(4, ScheduleKind::nlno);
    const auto dense = dense_eigenvalues(build_grover_h(p, 0.5).matrix());
    const auto closed = closed_levels(p, 0.5);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(dense[i] - closed[i]) < 1e-10);
    }
}

TEST_CASE("closed-form spectrum matches dense diagonalization") {
    for (auto k : kKinds) {
        for (std::size_t N : {2, 4, 8, 16, 32, 64}) {
            const auto p = make(N, k, N / 2);
            for (int i = 0; i <= 20; ++i) {
                const double s = i / 20.0;
                const auto dense = dense_eigenvalues(build_grover_h(p, s).matrix());
                const auto closed = closed_levels(p, s);
                double worst = 0;
                for (std::size_t j = 0; j < N; ++j) {
                    worst = std::max(worst, std::abs(dense[j] - closed[j]));
                }
                CHECK(worst < 1e-9);
                const auto sp = spectrum_closed_form(p, s);
                const double tr = build_grover_h(p, s).trace();
                CHECK(sp.E_minus + sp.E_plus + (N - 2.0) * sp.E_deg == doctest::Approx(tr).epsilon(1e-12));
                CHECK(sp.mu_minus >= 0.0);
                CHECK(sp.mu_plus >= 0.0);
            }
        }
    }
}

TEST_CASE("NLNO crossing point is finite") {
    for (std::size_t N : {4, 16, 64}) {
        const auto p = make(N, ScheduleKind::nlno);
        const double s = 1.0 / std::sqrt(static_cast<double>(N));
        const auto sp = spectrum_closed_form(p, s);
        for (double v : {sp.E_minus, sp.E_plus, sp.E_deg, sp.gap, sp.mu_minus, sp.mu_plus}) {
            CHECK(std::isfinite(v));
        }
        // b has a pole where the eigenvector loses its |m> component.
        for (double v : {sp.b_minus, sp.b_plus, sp.db_minus, sp.db_plus}) {
            CHECK_FALSE(std::isnan(v));
        }
        for (auto br : {Branch::minus, Branch::plus}) {
            CHECK(std::isfinite(eigvec_closed_form(p, s, br).amplitudes().norm()));
            CHECK(std::isfinite(eigvec_derivative(p, s, br).norm()));
        }
    }
}

TEST_CASE("eigenvectors") {
    for (auto k : kKinds) {
        const auto p = make(16, k, 5);
        CHECK(fidelity(eigvec_closed_form(p, 1.0, Branch::minus), QuantumState::basis(16, 5)) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(fidelity(eigvec_closed_form(p, 0.0, Branch::minus), uniform_state(16)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    for (auto k : kKinds) {
        for (std::size_t N : {2, 4, 8, 32}) {
            const auto p = make(N, k, 1);
            for (double s : {0.05, 0.3, 0.5, 0.71, 0.95}) {
                if (near_crossing(p, s)) {
                    continue;
                }
                const auto sp = spectrum_closed_form(p, s);
                const auto dense = eig_hermitian(build_grover_h(p, s));
                for (auto [br, E] : {std::pair{Branch::minus, sp.E_minus}, std::pair{Branch::plus, sp.E_plus}}) {
                    const auto v = eigvec_closed_form(p, s, br);
                    CHECK(v[1].real() >= 0.0);
                    double overlap = 0;
                    for (std::size_t j = 0; j < N; ++j) {
                        if (std::abs(dense.values[j] - E) < 1e-7) {
                            overlap += std::norm(dense.vectors[j].inner(v));
                        }
                    }
                    CHECK(overlap >= 1 - 1e-9);
                }
            }
        }
    }
}

TEST_CASE("eigenvector derivatives match finite differences") {
    for (auto k : kKinds) {
        for (std::size_t N : {4, 8, 64}) {
            const auto p = make(N, k, 2);
            for (double s : {0.12, 0.5, 0.77}) {
                if (near_crossing(p, s)) {
                    continue;
                }
                for (auto br : {Branch::minus, Branch::plus}) {
                    auto curve = [&](double x) { return eigvec_closed_form(p, x, br).amplitudes(); };
                    const CVector fd = stalab::testing::central_diff(curve, s);
                    const CVector an = eigvec_derivative(p, s, br);
                    CHECK((an - fd).norm() <= 1e-5 * std::max(1.0, fd.norm()));
                    CHECK(std::abs(curve(s).dot(an)) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("quantum metric") {
    const auto p8 = make(8, ScheduleKind::linear);
    const CVector d = eigvec_derivative(p8, 0.5, Branch::minus);
    CHECK(d.squaredNorm() == doctest::Approx(mu_grover(p8, 0.5).first).epsilon(1e-8));

    const auto p4 = make(4, ScheduleKind::linear);
    auto curve = [&](double x) { return eigvec_closed_form(p4, x, Branch::minus).amplitudes(); };
    const CVector fd = stalab::testing::central_diff(curve, 0.5);
    const double mu_fd = fd.squaredNorm() - std::norm(curve(0.5).dot(fd));
    CHECK(stalab::testing::rel_err(mu_grover(p4, 0.5).first, mu_fd) < 1e-6);

    for (auto k : kKinds) {
        for (double s : {0.0, 1.0}) {
            const auto [a, b] = mu_grover(make(16, k), s);
            CHECK(std::isfinite(a));
            CHECK(std::isfinite(b));
        }
    }
}

TEST_CASE("metric from the mixing coefficient") {
    // mu = (N-1) db^2 / (1 + (N-1) b^2)^2, written in the unnormalized uniform vector.
    for (auto k : kKinds) {
        const auto p = make(32, k);
        for (double s : {0.2, 0.45, 0.8}) {
            if (near_crossing(p, s)) {
                continue;
            }
            const auto sp = spectrum_closed_form(p, s);
            const double n1 = 31.0;
            for (auto [b, db, mu] : {std::tuple{sp.b_minus, sp.db_minus, sp.mu_minus},
                                     std::tuple{sp.b_plus, sp.db_plus, sp.mu_plus}}) {
                const double want = n1 * db * db / std::pow(1 + n1 * b * b, 2);
                CHECK(mu == doctest::Approx(want).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("metric peaks at the middle for the linear schedule") {
    for (std::size_t N : {16, 64}) {
        const auto p = make(N, ScheduleKind::linear);
        double best = -1, arg = -1;
        for (int i = 0; i <= 1000; ++i) {
            const double s = i / 1000.0;
            const double mu = mu_grover(p, s).first;
            if (mu > best) {
                best = mu;
                arg = s;
            }
        }
        CHECK(std::abs(arg - 0.5) <= 0.05);
    }
}

TEST_CASE("degenerate basis") {
    CHECK(degenerate_basis(make(2, ScheduleKind::linear)).empty());
    const auto p = make(4, ScheduleKind::linear, 0);
    const auto basis = degenerate_basis(p);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        CHECK(std::abs(v[0]) < 1e-12);
        CHECK(std::abs(v.amplitudes().sum()) < 1e-12);
    }
    for (auto k : kKinds) {
        const auto q = make(16, k, 7);
        const auto b = degenerate_basis(q);
        REQUIRE(b.size() == 14);
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                CHECK(std::abs(b[i].inner(b[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);
            }
            for (double s : {0.25, 0.75}) {
                const auto sp = spectrum_closed_form(q, s);
                const CVector hv = build_grover_h(q, s).apply(b[i].amplitudes());
                CHECK((hv - sp.E_deg * b[i].amplitudes()).norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("completeness of the eigenframe") {
    const auto p = make(16, ScheduleKind::superenergetic, 4);
    const double s = 0.4;
    std::vector<QuantumState> frame = degenerate_basis(p);
    frame.push_back(eigvec_closed_form(p, s, Branch::minus));
    frame.push_back(eigvec_closed_form(p, s, Branch::plus));
    CMatrix m(16, 16);
    for (std::size_t k = 0; k < 16; ++k) {
        m.col(k) = frame[k].amplitudes();
    }
    CHECK((m.adjoint() * m - CMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("counter-diabatic term") {
    for (auto k : kKinds) {
        for (std::size_t N : {4, 16}) {
            const auto p = make(N, k, 1, 0.7);
            const auto basis = degenerate_basis(p);
            for (double s : {0.2, 0.5, 0.9}) {
                if (near_crossing(p, s)) {
                    continue;
                }
                const auto cd = build_grover_cd(p, s);
                CHECK(hermiticity_defect(cd.matrix()) < 1e-10);
                CHECK(std::abs(cd.trace()) < 1e-10);
                for (const auto& v : basis) {
                    CHECK(cd.apply(v.amplitudes()).norm() < 1e-10);
                }
                CHECK(std::abs(anticommutator_trace(build_grover_h(p, s), cd)) < 1e-9);
            }
        }
    }
    const auto slow = make(8, ScheduleKind::linear, 0, 1e8);
    CHECK(build_grover_cd(slow, 0.5).matrix().cwiseAbs().maxCoeff() < 1e-7);

    // N = 2: purely off-diagonal in {|m>, |other>}.
    const auto two = build_grover_cd(make(2, ScheduleKind::linear), 0.3);
    CHECK(std::abs(two(0, 0)) < 1e-14);
    CHECK(std::abs(two(1, 1)) < 1e-14);
    CHECK(std::abs(two(0, 1)) > 0.1);
}

TEST_CASE("reduced two-level model reproduces the dense operators") {
    for (auto k : kKinds) {
        for (std::size_t N : {4, 32}) {
            const auto p = make(N, k, 3, 0.4);
            for (double s : {0.1, 0.5, 0.85}) {
                if (near_crossing(p, s)) {
                    continue;
                }
                for (bool cd : {false, true}) {
                    const auto dense = cd ? build_grover_sa(p, s) : build_grover_h(p, s);
                    const auto red = reduced_hamiltonian(p, s, cd);
                    for (std::size_t i = 0; i < 2; ++i) {
                        CVector e = CVector::Zero(2);
                        e(i) = 1.0;
                        const CVector lifted = embed_reduced(p, e);
                        for (std::size_t j = 0; j < 2; ++j) {
                            CVector f = CVector::Zero(2);
                            f(j) = 1.0;
                            const complex want = embed_reduced(p, f).dot(dense.apply(lifted));
                            CHECK(std::abs(red(j, i) - want) < 1e-12);
                        }
                    }
                }
            }
        }
    }
    const auto u = embed_reduced(make(8, ScheduleKind::linear), reduced_uniform_state(8).amplitudes());
    CHECK((u - uniform_state(8).amplitudes()).norm() < 1e-14);
}

TEST_CASE("results do not depend on the marked index") {
    for (auto k : kKinds) {
        const auto a = make(16, k, 0);
        const auto b = make(16, k, 11);
        for (double s : {0.15, 0.6}) {
            const auto sa = spectrum_closed_form(a, s);
            const auto sb = spectrum_closed_form(b, s);
            CHECK(sa.E_minus == sb.E_minus);
            CHECK(sa.mu_minus == sb.mu_minus);
            CHECK(frobenius_norm(build_grover_sa(a, s)) ==
                  doctest::Approx(frobenius_norm(build_grover_sa(b, s))).epsilon(1e-12));
        }
    }
}

TEST_CASE("oracle actions") {
    const auto p = make(8, ScheduleKind::linear, 5);
    CHECK(oracle_action(OracleKind::oracular, p, 5).norm() == 0.0);
    const CVector o2 = oracle_action(OracleKind::oracular, p, 2);
    CHECK((o2 - QuantumState::basis(8, 2).amplitudes()).norm() == 0.0);
    const CVector n2 = oracle_action(OracleKind::nonoracular, p, 2);
    CHECK((n2 - QuantumState::basis(8, 5).amplitudes() / std::sqrt(8.0)).norm() < 1e-15);
    CHECK_THROWS_AS(oracle_action(OracleKind::oracular, p, 8), DomainError);
}

TEST_CASE("custom schedules") {
    GroverProblem p = make(8, ScheduleKind::custom);
    CustomSchedule c;
    c.f = [](double s) { return 1 - s * s; };
    c.g = [](double s) { return s * s; };
    c.h = [](double) { return 0.0; };
    p.custom = c;
    const auto dense = dense_eigenvalues(build_grover_h(p, 0.4).matrix());
    CHECK(dense[0] == doctest::Approx(spectrum_closed_form(p, 0.4).E_minus).epsilon(1e-12));
    CHECK_THROWS_AS(eigvec_derivative(p, 0.4, Branch::minus), UnsupportedSchedule);
    CHECK_THROWS_AS(build_grover_cd(p, 0.4), UnsupportedSchedule);
}
