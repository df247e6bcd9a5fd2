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
 * Energy-optimal rotation angle for repeat-until-success gates. The average
 * cost of a gate that succeeds with probability sin^2(theta0/2) is
 *
 *     avg(wt, theta0) = 2 csc^2(theta0/2) sqrt(1 + theta0^2 / (4 wt^2))
 *
 * in units of hbar*omega, where wt = omega*tau.
 */

#pragma once

namespace stalab::opt {

/// Root of tan(theta/2) = theta in (0, pi); below it no real omega*tau exists.
double critical_angle();

/// Returns +inf when theta0 is too close to zero for csc^2 to be finite.
double avg_cost(double omega_tau, double theta0);

double eta(double theta0, double omega_tau);

/// Stationarity bracket theta0 - (4 wt^2 + theta0^2) cot(theta0/2).
double stationarity(double theta0, double omega_tau);

/// Inverse of the optimum map: the omega*tau for which theta0 is optimal.
double omega_tau_of_theta(double theta0);

struct ThetaOptResult {
    double omega_tau = 0.0;
    double theta_min = 0.0;
    double pi_minus_theta = 0.0; ///< pi - theta_min, kept at full precision
    double avg_cost_at_min = 0.0;
    double sigma_rel = 0.0;
    double eta_at_min = 0.0;
    double residual = 0.0;     ///< relative residual of the optimum condition
    double golden_theta = 0.0; ///< independent golden-section minimizer
};

inline constexpr int kMaxBisections = 200;
inline constexpr double kGoldenAgreement = 1e-6;

ThetaOptResult theta_min(double omega_tau);

double sigma_rel(double omega_tau);

/// Golden-section minimization of avg_cost over theta0 in [lo, hi].
double golden_section_min(double omega_tau, double lo, double hi, double tol = 1e-10);

} // namespace stalab::opt
