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

#include "stalab/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "stalab/cost.hpp"
#include "stalab/errors.hpp"

namespace stalab::opt {

namespace {

constexpr double kPi = std::numbers::pi;

void check_omega_tau(double omega_tau) {
    if (!(omega_tau > 0.0) || !std::isfinite(omega_tau)) {
        throw DomainError("omega*tau must be positive and finite");
    }
}

// tan(theta/2) - theta written in delta = pi - theta, which keeps the
// pole at theta = pi resolved to full relative precision.
double excess_delta(double delta) {
    return 1.0 / std::tan(0.5 * delta) - (kPi - delta);
}

double omega_tau_delta(double delta) {
    const double theta = kPi - delta;
    return 0.5 * std::sqrt(theta) * std::sqrt(excess_delta(delta));
}

} // namespace

double critical_angle() {
    static const double root = [] {
        double lo = 2.0;
        double hi = 3.0;
        for (int i = 0; i < kMaxBisections && hi - lo > 0.0; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) {
                break;
            }
            if (std::tan(0.5 * mid) - mid < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }();
    return root;
}

double avg_cost(double omega_tau, double theta0) {
    check_omega_tau(omega_tau);
    if (!(theta0 > 0.0 && theta0 <= kPi)) {
        throw DomainError("theta0 must lie in (0, pi]");
    }
    const double s = std::sin(0.5 * theta0);
    if (s * s < std::numeric_limits<double>::min()) {
        return std::numeric_limits<double>::infinity();
    }
    const double r = theta0 / (2.0 * omega_tau);
    return 2.0 / (s * s) * std::sqrt(1.0 + r * r);
}

double eta(double theta0, double omega_tau) {
    check_omega_tau(omega_tau);
    const double s = std::sin(0.5 * theta0);
    const double r = theta0 / (2.0 * omega_tau);
    return 1.0 / (s * s) / (2.0 * omega_tau * omega_tau * std::sqrt(1.0 + r * r));
}

double stationarity(double theta0, double omega_tau) {
    return theta0 - (4.0 * omega_tau * omega_tau + theta0 * theta0) / std::tan(0.5 * theta0);
}

double omega_tau_of_theta(double theta0) {
    if (!(theta0 > 0.0) || !(theta0 < kPi)) {
        throw DomainError("theta0 must lie in (0, pi)");
    }
    const double excess = std::tan(0.5 * theta0) - theta0;
    if (excess < 0.0) {
        throw InfeasibleAngle("tan(theta0/2) < theta0: no real omega*tau");
    }
    return 0.5 * std::sqrt(theta0) * std::sqrt(excess);
}

double golden_section_min(double omega_tau, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = avg_cost(omega_tau, c);
    double fd = avg_cost(omega_tau, d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = avg_cost(omega_tau, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = avg_cost(omega_tau, d);
        }
    }
    return 0.5 * (a + b);
}

ThetaOptResult theta_min(double omega_tau) {
    check_omega_tau(omega_tau);
    // omega_tau_delta decreases from +inf at delta -> 0 to 0 at pi - theta*.
    double lo = 0.0;
    double hi = kPi - critical_angle();
    for (int i = 0; i < kMaxBisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) {
            break;
        }
        if (omega_tau_delta(mid) > omega_tau) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double delta = 0.5 * (lo + hi);

    ThetaOptResult r;
    r.omega_tau = omega_tau;
    r.pi_minus_theta = delta;
    r.theta_min = kPi - delta;
    r.avg_cost_at_min = avg_cost(omega_tau, r.theta_min);
    r.sigma_rel = r.avg_cost_at_min / cost::cost_ce_closed_form(omega_tau, kPi, 0);
    r.eta_at_min = eta(r.theta_min, omega_tau);
    const double lhs = r.theta_min * (excess_delta(delta) + r.theta_min);
    const double rhs = r.theta_min * r.theta_min + 4.0 * omega_tau * omega_tau;
    r.residual = std::abs(lhs - rhs) / lhs;

    r.golden_theta = golden_section_min(omega_tau, 1.0, kPi);
    if (std::abs(r.golden_theta - r.theta_min) > kGoldenAgreement) {
        throw NumericalFailure("optimum angle disagrees with golden-section search");
    }
    return r;
}

double sigma_rel(double omega_tau) {
    return theta_min(omega_tau).sigma_rel;
}

} // namespace stalab::opt
