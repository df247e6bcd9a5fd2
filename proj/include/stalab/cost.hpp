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
 * Energetic cost of a driven evolution, Sigma = int_0^1 ||H(s)|| ds, under the
 * Frobenius or spectral norm; closed forms for the controlled-evolution gate;
 * log-log scaling fits for the search models; and time-to-solution searches.
 *
 * Units: gate costs are reported in units of hbar*omega, search costs in the
 * (dimensionless) units of the search Hamiltonian. hbar = 1 and tau is kept
 * explicit everywhere.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "stalab/ce_gates.hpp"
#include "stalab/dynamics.hpp"
#include "stalab/grover.hpp"
#include "stalab/quadrature.hpp"

namespace stalab::cost {

enum class NormKind { frobenius, spectral };
enum class Method { quadrature, closed_form };

std::string_view to_string(NormKind kind);
NormKind parse_norm(std::string_view name);
std::string_view to_string(Method method);

struct CostReport {
    double sigma = 0.0;
    NormKind norm_kind = NormKind::frobenius;
    Method method = Method::quadrature;
    std::size_t samples = 0;
    std::vector<std::pair<double, double>> integrand_trace;
    double tau = 0.0;
    double error_estimate = 0.0;
};

/// Quadrature of ||H(s)|| for an operator path built densely at every node.
CostReport energetic_cost(const dynamics::OperatorPath& h_of_s, NormKind norm,
                          const quad::QuadratureSpec& spec = {}, double tau = 0.0);

/// Quadrature of an already-evaluated norm s -> ||H(s)||.
CostReport integrate_norm(const std::function<double(double)>& norm_of_s, NormKind norm,
                          const quad::QuadratureSpec& spec = {}, double tau = 0.0);

/// 2^{n/2} * 2 sqrt(1 + theta0^2 / (4 (omega tau)^2)), in units of hbar*omega.
double cost_ce_closed_form(double omega_tau, double theta0, int n);

/// One adiabatic level at s: energy, eigenstate velocity mu (s-derivatives) and multiplicity.
struct Level {
    double energy;
    double mu;
    double multiplicity;
};

/// Everything cost_superadiabatic_spectral needs from a model.
struct SpectrumModel {
    /// Adiabatic levels at s.
    std::function<std::vector<Level>(double)> levels;
    /// ||H(s) + H_CD(s)||_2 for total time tau (tau = +inf drops H_CD).
    std::function<double(double, double)> sa_spectral_norm;
};

/**
 * Superadiabatic cost. Frobenius: int sqrt(sum_m [E_m^2 + mu_m / tau^2]) ds
 * from the spectrum. Spectral: quadrature of sa_spectral_norm. tau = +inf
 * gives the adiabatic cost.
 */
CostReport cost_superadiabatic_spectral(const SpectrumModel& model, double tau, NormKind norm,
                                        const quad::QuadratureSpec& spec = {});

/// Closed-form spectrum of the gate model: 2N levels at +-omega, mu = theta0^2/4.
SpectrumModel ce_spectrum_model(const ce::GateSpec& spec);

/// Closed-form search spectrum; H_CD in the spectral norm uses the exact
/// two-level block plus the degenerate level.
SpectrumModel grover_spectrum_model(const grover::GroverProblem& problem);

// ---- search models -------------------------------------------------------

enum class Model { local_adiabatic, superenergetic, nlno, superadiabatic };

std::string_view to_string(Model model);
Model parse_model(std::string_view name);

/// Search problem behind a model (the superadiabatic model uses the linear schedule).
grover::GroverProblem model_problem(Model model, std::size_t N, double tau);

/// Cost of a search model; adiabatic models ignore tau.
CostReport model_cost(Model model, std::size_t N, NormKind norm, double tau,
                      quad::QuadratureSpec spec = {});

struct LinearFit {
    double slope;
    double intercept;
    double r2;
};

/// Least squares on (log x, log y). Throws InvalidData on non-positive input.
LinearFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

struct ScalingFit {
    Model model;
    NormKind norm_kind;
    std::vector<std::size_t> Ns;
    std::vector<double> sigmas;
    double slope;
    double intercept;
    double r2;
    std::size_t dropped; ///< smallest sizes excluded from the fit
};

inline constexpr std::size_t kDropSmallest = 2;

/// Cost for each N, then a log-log fit that skips the @p drop smallest sizes.
ScalingFit scaling_sweep(Model model, NormKind norm, std::span<const std::size_t> Ns, double tau,
                         std::size_t drop = kDropSmallest);

// ---- time to solution ----------------------------------------------------

struct TtsOptions {
    double fidelity_target = 0.9;
    double tau_min = 1e-3;
    double tau_max = 1e4;
    double rel_resolution = 0.05;
};

struct TtsResult {
    double tau_star;
    double fidelity;
    std::size_t propagations;
};

inline constexpr std::size_t kMaxDynamicsN = 256;

/// |<m|psi(tau)>|^2 after evolving |+> under the model for total time tau.
double search_fidelity(Model model, std::size_t N, double tau);

/// Smallest tau (to rel_resolution) whose final fidelity reaches the target:
/// doubling from tau_min to bracket, then geometric bisection.
TtsResult time_to_solution(Model model, std::size_t N, const TtsOptions& options = {});

struct TtsFit {
    Model model;
    std::vector<std::size_t> Ns;
    std::vector<double> taus;
    LinearFit fit;
};

TtsFit tts_sweep(Model model, std::span<const std::size_t> Ns, const TtsOptions& options = {});

} // namespace stalab::cost
