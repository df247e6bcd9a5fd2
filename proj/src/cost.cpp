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

#include "stalab/cost.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stalab/errors.hpp"
#include "stalab/parallel.hpp"

namespace stalab::cost {

namespace {

CostReport from_quadrature(quad::QuadratureResult r, NormKind norm, double tau) {
    CostReport out;
    out.sigma = r.value;
    out.norm_kind = norm;
    out.method = Method::quadrature;
    out.samples = r.evaluations;
    out.integrand_trace = std::move(r.trace);
    out.tau = tau;
    out.error_estimate = r.error_estimate;
    return out;
}

double inverse_tau_sq(double tau) {
    return std::isfinite(tau) ? 1.0 / (tau * tau) : 0.0;
}

} // namespace

std::string_view to_string(NormKind kind) {
    return kind == NormKind::frobenius ? "frobenius" : "spectral";
}

NormKind parse_norm(std::string_view name) {
    if (name == "frobenius") {
        return NormKind::frobenius;
    }
    if (name == "spectral") {
        return NormKind::spectral;
    }
    throw DomainError("unknown norm '" + std::string(name) + "'");
}

std::string_view to_string(Method method) {
    return method == Method::quadrature ? "quadrature" : "closed_form";
}

CostReport energetic_cost(const dynamics::OperatorPath& h_of_s, NormKind norm,
                          const quad::QuadratureSpec& spec, double tau) {
    auto fn = [&](double s) {
        const HermitianOperator h = h_of_s(s);
        return norm == NormKind::frobenius ? frobenius_norm(h) : spectral_norm(h);
    };
    return from_quadrature(quad::integrate(fn, 0.0, 1.0, spec), norm, tau);
}

CostReport integrate_norm(const std::function<double(double)>& norm_of_s, NormKind norm,
                          const quad::QuadratureSpec& spec, double tau) {
    return from_quadrature(quad::integrate(norm_of_s, 0.0, 1.0, spec), norm, tau);
}

double cost_ce_closed_form(double omega_tau, double theta0, int n) {
    if (!(omega_tau > 0.0)) {
        throw DomainError("omega*tau must be positive");
    }
    if (!(theta0 > 0.0 && theta0 <= 3.141592653589793)) {
        throw DomainError("theta0 must lie in (0, pi]");
    }
    if (n < 0) {
        throw DomainError("control count must be non-negative");
    }
    const double ratio = theta0 / (2.0 * omega_tau);
    return std::exp2(0.5 * n) * 2.0 * std::sqrt(1.0 + ratio * ratio);
}

CostReport cost_superadiabatic_spectral(const SpectrumModel& model, double tau, NormKind norm,
                                        const quad::QuadratureSpec& spec) {
    if (!(tau > 0.0)) {
        throw DomainError("tau must be positive");
    }
    if (norm == NormKind::spectral) {
        auto fn = [&](double s) { return model.sa_spectral_norm(s, tau); };
        return from_quadrature(quad::integrate(fn, 0.0, 1.0, spec), norm, tau);
    }
    const double k = inverse_tau_sq(tau);
    auto fn = [&](double s) {
        double sum = 0.0;
        for (const Level& l : model.levels(s)) {
            sum += l.multiplicity * (l.energy * l.energy + l.mu * k);
        }
        return std::sqrt(sum);
    };
    return from_quadrature(quad::integrate(fn, 0.0, 1.0, spec), norm, tau);
}

SpectrumModel ce_spectrum_model(const ce::GateSpec& spec) {
    spec.validate();
    const double mult = 2.0 * static_cast<double>(spec.control_states());
    const double mu = spec.theta0 * spec.theta0 / 4.0;
    SpectrumModel m;
    m.levels = [=](double) {
        return std::vector<Level>{{-spec.omega, mu, mult}, {spec.omega, mu, mult}};
    };
    m.sa_spectral_norm = [spec](double s, double tau) {
        if (!std::isfinite(tau)) {
            return spectral_norm(ce::build_ce_hamiltonian(s, spec));
        }
        ce::GateSpec at = spec;
        at.tau = tau;
        return spectral_norm(ce::build_superadiabatic_ce(s, at));
    };
    return m;
}

SpectrumModel grover_spectrum_model(const grover::GroverProblem& problem) {
    problem.validate();
    const double deg = static_cast<double>(problem.N - 2);
    SpectrumModel m;
    m.levels = [problem, deg](double s) {
        const grover::GroverSpectrum sp = grover::spectrum_closed_form(problem, s);
        return std::vector<Level>{
            {sp.E_minus, sp.mu_minus, 1.0}, {sp.E_plus, sp.mu_plus, 1.0}, {sp.E_deg, 0.0, deg}};
    };
    m.sa_spectral_norm = [problem](double s, double tau) {
        grover::GroverProblem at = problem;
        const bool with_cd = std::isfinite(tau);
        if (with_cd) {
            at.tau = tau;
        }
        double norm = spectral_norm(grover::reduced_hamiltonian(at, s, with_cd));
        if (problem.N > 2) {
            norm = std::max(norm, std::abs(grover::schedule_at(problem, s).f +
                                           grover::schedule_at(problem, s).g));
        }
        return norm;
    };
    return m;
}

std::string_view to_string(Model model) {
    switch (model) {
    case Model::local_adiabatic: return "local_adiabatic";
    case Model::superenergetic: return "superenergetic";
    case Model::nlno: return "nlno";
    case Model::superadiabatic: return "superadiabatic";
    }
    return "unknown";
}

Model parse_model(std::string_view name) {
    for (auto m : {Model::local_adiabatic, Model::superenergetic, Model::nlno, Model::superadiabatic}) {
        if (name == to_string(m)) {
            return m;
        }
    }
    throw DomainError("unknown model '" + std::string(name) + "'");
}

grover::GroverProblem model_problem(Model model, std::size_t N, double tau) {
    grover::GroverProblem p;
    p.N = N;
    p.marked = 0;
    p.tau = tau;
    switch (model) {
    case Model::local_adiabatic: p.schedule = grover::ScheduleKind::local_adiabatic; break;
    case Model::superenergetic: p.schedule = grover::ScheduleKind::superenergetic; break;
    case Model::nlno: p.schedule = grover::ScheduleKind::nlno; break;
    case Model::superadiabatic: p.schedule = grover::ScheduleKind::linear; break;
    }
    p.validate();
    return p;
}

CostReport model_cost(Model model, std::size_t N, NormKind norm, double tau,
                      quad::QuadratureSpec spec) {
    if (N > 256) {
        spec.min_panels = std::max<std::size_t>(spec.min_panels, 64);
    }
    const double t = model == Model::superadiabatic ? tau : std::numeric_limits<double>::infinity();
    const grover::GroverProblem p = model_problem(model, N, model == Model::superadiabatic ? tau : 1.0);
    CostReport r = cost_superadiabatic_spectral(grover_spectrum_model(p), t, norm, spec);
    r.tau = t;
    return r;
}

LinearFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw InvalidData("log-log fit needs at least two paired points");
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0) || !std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
            throw InvalidData("log-log fit needs positive finite data");
        }
        const double x = std::log(xs[i]);
        const double y = std::log(ys[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) {
        throw InvalidData("log-log fit needs at least two distinct x values");
    }
    const double slope = (n * sxy - sx * sy) / den;
    const double intercept = (sy - slope * sx) / n;
    const double ymean = sy / n;
    double ss_tot = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double y = std::log(ys[i]);
        const double r = y - (intercept + slope * std::log(xs[i]));
        ss_res += r * r;
        ss_tot += (y - ymean) * (y - ymean);
    }
    const double r2 = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    return {slope, intercept, r2};
}

ScalingFit scaling_sweep(Model model, NormKind norm, std::span<const std::size_t> Ns, double tau,
                         std::size_t drop) {
    if (Ns.size() < drop + 2) {
        throw InvalidData("scaling sweep needs at least " + std::to_string(drop + 2) + " sizes");
    }
    const std::vector<std::size_t> sizes(Ns.begin(), Ns.end());
    quad::QuadratureSpec spec;
    spec.keep_trace = false;
    const std::vector<double> sigmas = parallel_map<double>(sizes.size(), [&](std::size_t i) {
        return model_cost(model, sizes[i], norm, tau, spec).sigma;
    });
    std::vector<double> xs;
    for (std::size_t i = drop; i < sizes.size(); ++i) {
        xs.push_back(static_cast<double>(sizes[i]));
    }
    const LinearFit fit =
        fit_loglog(xs, std::span<const double>(sigmas).subspan(drop));
    return {model, norm, sizes, sigmas, fit.slope, fit.intercept, fit.r2, drop};
}

double search_fidelity(Model model, std::size_t N, double tau) {
    if (N > kMaxDynamicsN) {
        throw DomainError("search dynamics is limited to N <= " + std::to_string(kMaxDynamicsN));
    }
    const grover::GroverProblem p = model_problem(model, N, tau);
    const bool with_cd = model == Model::superadiabatic;
    const dynamics::OperatorPath path = [p, with_cd](double s) {
        return grover::reduced_hamiltonian(p, s, with_cd);
    };
    const auto r = dynamics::propagate(path, grover::reduced_uniform_state(N), tau,
                                       dynamics::default_steps(path, tau));
    return std::norm(r.final_state[0]);
}

TtsResult time_to_solution(Model model, std::size_t N, const TtsOptions& o) {
    if (!(o.tau_min > 0.0) || !(o.tau_max > o.tau_min) || !(o.rel_resolution > 0.0)) {
        throw DomainError("time-to-solution needs 0 < tau_min < tau_max and a positive resolution");
    }
    std::size_t runs = 0;
    auto fid = [&](double tau) {
        ++runs;
        return search_fidelity(model, N, tau);
    };
    double tau = o.tau_min;
    double f = fid(tau);
    if (f >= o.fidelity_target) {
        return {tau, f, runs};
    }
    while (f < o.fidelity_target) {
        tau *= 2.0;
        if (tau > o.tau_max) {
            throw RangeExhausted("fidelity target not reached below tau_max = " +
                                 std::to_string(o.tau_max));
        }
        f = fid(tau);
    }
    double lo = tau / 2.0;
    double hi = tau;
    double f_hi = f;
    while (hi / lo > 1.0 + o.rel_resolution) {
        const double mid = std::sqrt(lo * hi);
        const double fm = fid(mid);
        if (fm >= o.fidelity_target) {
            hi = mid;
            f_hi = fm;
        } else {
            lo = mid;
        }
    }
    return {hi, f_hi, runs};
}

TtsFit tts_sweep(Model model, std::span<const std::size_t> Ns, const TtsOptions& options) {
    const std::vector<std::size_t> sizes(Ns.begin(), Ns.end());
    const std::vector<double> taus = parallel_map<double>(sizes.size(), [&](std::size_t i) {
        return time_to_solution(model, sizes[i], options).tau_star;
    });
    std::vector<double> xs(sizes.begin(), sizes.end());
    return {model, sizes, taus, fit_loglog(xs, taus)};
}

} // namespace stalab::cost
