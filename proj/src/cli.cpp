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

#include "stalab/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <string_view>

#include "CLI11.hpp"

#include "stalab/ce_gates.hpp"
#include "stalab/cost.hpp"
#include "stalab/dynamics.hpp"
#include "stalab/grover.hpp"
#include "stalab/optimizer.hpp"
#include "stalab/parallel.hpp"
#include "stalab/report.hpp"
#include "stalab/sampling.hpp"

namespace stalab::cli {

using json = nlohmann::json;

namespace {

constexpr std::size_t kTableMinN = 16;
constexpr std::size_t kTableMaxN = 1024;
constexpr std::size_t kTtsMinN = 8;
constexpr std::size_t kTtsMaxN = 128;
constexpr double kFigLow = 1e-4;
constexpr double kFigHigh = 1e3;

double num(double v) { return report::round_significant(v); }

json num_or_string(double v) {
    if (std::isfinite(v)) {
        return num(v);
    }
    return report::format_number(v);
}

void emit(const RunConfig& c, std::string_view text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
    } else {
        report::write_atomic(c.out, text);
    }
}

void emit_json(const RunConfig& c, const json& j, std::ostream& out) {
    emit(c, j.dump(2) + "\n", out);
}

json header(const RunConfig& c, std::string_view reference) {
    json j;
    j["command"] = c.command;
    j["paper_ref"] = std::string(reference);
    j["config"] = to_json(c);
    return j;
}

std::vector<std::size_t> power_sizes(std::size_t lo, std::size_t hi) {
    if (lo < 2 || hi < lo) {
        throw ConfigError("size range must satisfy 2 <= n_min <= n_max");
    }
    std::vector<std::size_t> out;
    std::size_t N = 1;
    while (N < lo) {
        N *= 2;
    }
    for (; N <= hi; N *= 2) {
        out.push_back(N);
    }
    if (out.empty()) {
        throw ConfigError("size range contains no power of two");
    }
    return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2) {
        throw ConfigError("log grid needs 0 < min < max and at least two points");
    }
    std::vector<double> g(points);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < points; ++i) {
        g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

ce::GateSpec gate_spec(const RunConfig& c) {
    ce::GateSpec spec;
    spec.n = c.n;
    spec.phi = c.phi;
    spec.axis = c.axis;
    spec.theta0 = c.theta0;
    spec.omega = 1.0;
    spec.tau = c.omega_tau;
    spec.validate();
    return spec;
}

grover::GroverProblem grover_problem(const RunConfig& c) {
    grover::GroverProblem p;
    p.N = c.N;
    p.schedule = grover::parse_schedule(c.schedule);
    p.tau = c.tau;
    p.validate();
    return p;
}

int cmd_gate_cost(const RunConfig& c, std::ostream& out) {
    const ce::GateSpec spec = gate_spec(c);
    const cost::NormKind norm = cost::parse_norm(c.norm);
    const auto r = cost::energetic_cost([&spec](double s) { return ce::build_superadiabatic_ce(s, spec); },
                                        norm, {}, c.omega_tau);
    const double frob = cost::cost_ce_closed_form(c.omega_tau, c.theta0, c.n);
    const double closed = norm == cost::NormKind::frobenius
                              ? frob
                              : frob / std::sqrt(static_cast<double>(spec.dim()));
    json j = header(c, "superadiabatic controlled-evolution gate cost");
    j["sigma"] = num(r.sigma);
    j["closed_form"] = num(closed);
    j["norm_kind"] = std::string(cost::to_string(norm));
    j["method"] = std::string(cost::to_string(r.method));
    j["error_estimate"] = num(r.error_estimate);
    j["samples"] = r.samples;
    j["omega_tau"] = num(c.omega_tau);
    j["theta0"] = num(c.theta0);
    j["n"] = c.n;
    emit_json(c, j, out);
    return kExitOk;
}

json theta_json(const opt::ThetaOptResult& r) {
    return {{"omega_tau", num(r.omega_tau)},
            {"theta_min", num(r.theta_min)},
            {"pi_minus_theta", num(r.pi_minus_theta)},
            {"avg_cost_at_min", num(r.avg_cost_at_min)},
            {"sigma_rel", num(r.sigma_rel)},
            {"eta_at_min", num(r.eta_at_min)},
            {"residual", num(r.residual)},
            {"golden_theta", num(r.golden_theta)}};
}

int cmd_theta_opt(const RunConfig& c, std::ostream& out) {
    json j = header(c, "optimal sweep angle of the average repeat-until-success cost");
    j.update(theta_json(opt::theta_min(c.omega_tau)));
    j["critical_angle"] = num(opt::critical_angle());
    emit_json(c, j, out);
    return kExitOk;
}

int cmd_fig1(const RunConfig& c, std::ostream& out, std::ostream& diag) {
    if (c.omega_tau_min < kFigLow || c.omega_tau_max > kFigHigh) {
        throw ConfigError("fig1 grid must lie within [1e-4, 1e3]");
    }
    const auto grid = log_grid(c.omega_tau_min, c.omega_tau_max, c.grid_points);
    const auto rows = parallel_map<opt::ThetaOptResult>(
        grid.size(), [&grid](std::size_t i) { return opt::theta_min(grid[i]); });
    diag << "[fig1] " << grid.size() << " grid points done\n";

    report::CsvTable table({"omega_tau", "theta_min", "sigma_rel", "avg_cost_at_min"});
    report::Series theta{"theta0 min", {}, {}};
    report::Series rel{"relative cost", {}, {}};
    for (const auto& r : rows) {
        table.add_numeric_row({r.omega_tau, r.theta_min, r.sigma_rel, r.avg_cost_at_min});
        theta.x.push_back(r.omega_tau);
        theta.y.push_back(r.theta_min);
        rel.x.push_back(r.omega_tau);
        rel.y.push_back(r.sigma_rel);
    }
    emit(c, table.str(), out);
    if (!c.out.empty()) {
        std::filesystem::path svg(c.out);
        svg.replace_extension(".svg");
        report::write_atomic(svg.string(),
                             report::svg_plot({{"optimal angle", "omega tau", "theta0 min", true, {theta}},
                                               {"relative cost", "omega tau", "Sigma rel", true, {rel}}}));
    }
    return kExitOk;
}

int cmd_grover_spectrum(const RunConfig& c, std::ostream& out) {
    const grover::GroverProblem p = grover_problem(c);
    if (c.s_points < 2) {
        throw ConfigError("s_points must be at least 2");
    }
    report::CsvTable table(
        {"s", "E_minus", "E_plus", "E_deg", "gap", "mu_minus", "mu_plus", "degenerate"});
    for (std::size_t i = 0; i < c.s_points; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(c.s_points - 1);
        const auto sp = grover::spectrum_closed_form(p, s);
        std::vector<std::string> row;
        for (double v : {s, sp.E_minus, sp.E_plus, sp.E_deg, sp.gap, sp.mu_minus, sp.mu_plus}) {
            row.push_back(report::format_number(v));
        }
        row.push_back(sp.degenerate ? "1" : "0");
        table.add_row(std::move(row));
    }
    emit(c, table.str(), out);
    return kExitOk;
}

int cmd_grover_cost(const RunConfig& c, std::ostream& out) {
    const cost::Model model = cost::parse_model(c.model);
    const cost::NormKind norm = cost::parse_norm(c.norm);
    const auto r = cost::model_cost(model, c.N, norm, c.tau);
    json j = header(c, "energetic cost of the search Hamiltonian");
    j["sigma"] = num(r.sigma);
    j["model"] = std::string(cost::to_string(model));
    j["norm_kind"] = std::string(cost::to_string(norm));
    j["N"] = c.N;
    j["tau"] = num_or_string(r.tau);
    j["error_estimate"] = num(r.error_estimate);
    j["samples"] = r.samples;
    emit_json(c, j, out);
    return kExitOk;
}

json trace_json(const dynamics::PropagationResult& r) {
    json t = json::array();
    for (const auto& [s, f] : r.fidelity_trace) {
        t.push_back({num(s), num(f)});
    }
    return t;
}

double min_trace(const dynamics::PropagationResult& r) {
    double m = 1.0;
    for (const auto& p : r.fidelity_trace) {
        m = std::min(m, p.second);
    }
    return m;
}

int cmd_evolve(const RunConfig& c, std::ostream& out) {
    json j;
    if (c.target == "ce") {
        const ce::GateSpec spec = gate_spec(c);
        CounterRng rng(c.seed);
        const QuantumState psi_n = random_state(spec.target_dim(), rng);
        const bool cd = c.counter_diabatic;
        const dynamics::OperatorPath path = [spec, cd](double s) {
            return cd ? ce::build_superadiabatic_ce(s, spec) : ce::build_ce_hamiltonian(s, spec);
        };
        const std::size_t steps = c.steps ? c.steps : dynamics::default_steps(path, spec.tau);
        const auto r = dynamics::ground_fidelity_trace(
            path, ce::initial_state(psi_n, spec), spec.tau, steps,
            [&spec](double s) { return ce::ground_projector(s, spec); });
        j = header(c, "transitionless controlled-evolution gate dynamics");
        j["final_fidelity"] = num(fidelity(r.final_state, ce::expected_final_state(psi_n, spec)));
        j["success_probability"] = num(ce::success_probability(r.final_state));
        j["min_ground_fidelity"] = num(min_trace(r));
        j["norm_drift"] = num(r.norm_drift);
        j["steps"] = r.steps;
        j["trace"] = trace_json(r);
    } else if (c.target == "grover") {
        const grover::GroverProblem p = grover_problem(c);
        if (p.N > cost::kMaxDynamicsN) {
            throw ConfigError("dense search dynamics is limited to N <= 256");
        }
        const bool cd = c.counter_diabatic;
        const dynamics::OperatorPath path = [p, cd](double s) {
            return cd ? grover::build_grover_sa(p, s) : grover::build_grover_h(p, s);
        };
        const std::size_t steps = c.steps ? c.steps : dynamics::default_steps(path, p.tau);
        const auto r = dynamics::ground_fidelity_trace(
            path, grover::uniform_state(p.N), p.tau, steps, [&p](double s) {
                return HermitianOperator::projector(
                    grover::eigvec_closed_form(p, s, grover::Branch::minus));
            });
        j = header(c, "transitionless search dynamics");
        j["marked_probability"] = num(std::norm(r.final_state[p.marked]));
        j["min_ground_fidelity"] = num(min_trace(r));
        j["norm_drift"] = num(r.norm_drift);
        j["steps"] = r.steps;
        j["trace"] = trace_json(r);
    } else {
        throw ConfigError("evolve target must be 'ce' or 'grover'");
    }
    emit_json(c, j, out);
    return kExitOk;
}

cost::TtsOptions tts_options(const RunConfig& c) {
    cost::TtsOptions o;
    if (!(c.fidelity_target > 0.0 && c.fidelity_target < 1.0)) {
        throw ConfigError("fidelity_target must lie in (0, 1)");
    }
    o.fidelity_target = c.fidelity_target;
    return o;
}

int cmd_time_to_solution(const RunConfig& c, std::ostream& out, std::ostream& diag) {
    const cost::Model model = cost::parse_model(c.model);
    const auto sizes = power_sizes(c.n_min ? c.n_min : kTtsMinN, c.n_max ? c.n_max : kTtsMaxN);
    if (sizes.back() > cost::kMaxDynamicsN) {
        throw ConfigError("time-to-solution is limited to N <= 256");
    }
    const auto o = tts_options(c);
    const auto rows = parallel_map<cost::TtsResult>(sizes.size(), [&](std::size_t i) {
        return cost::time_to_solution(model, sizes[i], o);
    });
    diag << "[time-to-solution] " << cost::to_string(model) << " done\n";
    json j = header(c, "time to solution of the search models");
    j["model"] = std::string(cost::to_string(model));
    json pts = json::array();
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        pts.push_back({{"N", sizes[i]},
                       {"tau_star", num(rows[i].tau_star)},
                       {"fidelity", num(rows[i].fidelity)},
                       {"propagations", rows[i].propagations}});
        xs.push_back(static_cast<double>(sizes[i]));
        ys.push_back(rows[i].tau_star);
    }
    j["points"] = pts;
    if (sizes.size() >= 2) {
        const auto fit = cost::fit_loglog(xs, ys);
        j["slope"] = num(fit.slope);
        j["r2"] = num(fit.r2);
    }
    emit_json(c, j, out);
    return kExitOk;
}

int cmd_table1(const RunConfig& c, std::ostream& out, std::ostream& diag) {
    const auto sizes = power_sizes(c.n_min ? c.n_min : kTableMinN, c.n_max ? c.n_max : kTableMaxN);
    if (sizes.size() < cost::kDropSmallest + 2) {
        throw ConfigError("table1 needs at least four sizes");
    }
    report::CsvTable table({"model", "frobenius_slope", "spectral_slope", "frobenius_r2",
                            "spectral_r2", "time_slope"});
    for (auto model : {cost::Model::local_adiabatic, cost::Model::superenergetic, cost::Model::nlno,
                       cost::Model::superadiabatic}) {
        const auto fro = cost::scaling_sweep(model, cost::NormKind::frobenius, sizes, c.tau);
        const auto spe = cost::scaling_sweep(model, cost::NormKind::spectral, sizes, c.tau);
        double time_slope = std::numeric_limits<double>::quiet_NaN();
        if (c.with_time) {
            const auto tts_sizes = power_sizes(kTtsMinN, kTtsMaxN);
            time_slope = cost::tts_sweep(model, tts_sizes, tts_options(c)).fit.slope;
        }
        diag << "[table1] " << cost::to_string(model) << " done\n";
        table.add_row({std::string(cost::to_string(model)), report::format_number(fro.slope),
                       report::format_number(spe.slope), report::format_number(fro.r2),
                       report::format_number(spe.r2),
                       c.with_time ? report::format_number(time_slope) : ""});
    }
    emit(c, table.str(), out);
    return kExitOk;
}

// Lightweight pre-scan so the config file can sit under the flags.
std::string find_config_path(int argc, const char* const* argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string_view a = argv[i];
        if (a == "--config") {
            if (i + 1 >= argc) {
                throw ConfigError("--config needs a file name");
            }
            return argv[i + 1];
        }
        if (a.starts_with("--config=")) {
            return std::string(a.substr(9));
        }
    }
    return {};
}

std::uint64_t parse_seed(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw ConfigError("seed must be an unsigned integer, got '" + text + "'");
    }
    errno = 0;
    const unsigned long long v = std::strtoull(text.c_str(), nullptr, 10);
    if (errno == ERANGE) {
        throw ConfigError("seed out of range: '" + text + "'");
    }
    return v;
}

RunConfig base_config(int argc, const char* const* argv) {
    RunConfig c;
    if (const char* env = std::getenv("STA_SEED"); env != nullptr && *env != '\0') {
        c.seed = parse_seed(env);
    }
    const std::string path = find_config_path(argc, argv);
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError("cannot read config file '" + path + "'");
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw ConfigError("config file '" + path + "': " + e.what());
        }
        apply_json(c, j);
    }
    return c;
}

void build_app(CLI::App& app, RunConfig& c, std::string& config_path, std::string& seed_text) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", config_path, "JSON file with default settings");
    app.add_option("--n", c.n, "control qubits");
    app.add_option("--theta0", c.theta0, "sweep angle in (0, pi]");
    app.add_option("--omega-tau", c.omega_tau, "omega * tau");
    app.add_option("--phi", c.phi, "rotation angle");
    app.add_option("--axis", c.axis, "rotation axis (three components)");
    app.add_option("--N,--size", c.N, "search space size");
    app.add_option("--schedule", c.schedule, "linear|local_adiabatic|superenergetic|nlno");
    app.add_option("--model", c.model, "local_adiabatic|superenergetic|nlno|superadiabatic");
    app.add_option("--tau", c.tau, "total evolution time");
    app.add_option("--s-points", c.s_points, "samples of s in [0, 1]");
    app.add_flag("--cd", c.counter_diabatic, "add the counter-diabatic term");
    app.add_option("--omega-tau-min", c.omega_tau_min, "lower end of the omega*tau grid");
    app.add_option("--omega-tau-max", c.omega_tau_max, "upper end of the omega*tau grid");
    app.add_option("--points", c.grid_points, "grid points");
    app.add_option("--n-min", c.n_min, "smallest search size");
    app.add_option("--n-max", c.n_max, "largest search size");
    app.add_flag("--with-time", c.with_time, "include time-to-solution slopes in table1");
    app.add_option("--fidelity-target", c.fidelity_target, "time-to-solution fidelity target");
    app.add_option("--norm", c.norm, "frobenius|spectral");
    app.add_option("--target", c.target, "evolve target: ce|grover");
    app.add_option("--steps", c.steps, "propagation steps (0 = adaptive)");
    app.add_option("--out", c.out, "output file (default: standard output)");
    app.add_option("--seed", seed_text, "random seed");

    const std::pair<const char*, const char*> subs[] = {
        {"gate-cost", "cost of the superadiabatic controlled-evolution gate"},
        {"theta-opt", "energy-optimal sweep angle for one omega*tau"},
        {"fig1", "optimal angle and relative cost over an omega*tau grid"},
        {"grover-spectrum", "search spectrum along s"},
        {"grover-cost", "energetic cost of one search model"},
        {"evolve", "propagate a gate or search and report fidelities"},
        {"time-to-solution", "shortest tau reaching the fidelity target"},
        {"table1", "energy-cost scaling slopes of the search models"},
    };
    for (const auto& [name, help] : subs) {
        app.add_subcommand(name, help)->fallthrough();
    }
}

} // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {
        "gate-cost", "theta-opt", "fig1", "grover-spectrum",
        "grover-cost", "evolve", "time-to-solution", "table1"};
    return names;
}

json to_json(const RunConfig& c) {
    return {{"command", c.command},
            {"n", c.n},
            {"theta0", num(c.theta0)},
            {"omega_tau", num(c.omega_tau)},
            {"phi", num(c.phi)},
            {"axis", {num(c.axis[0]), num(c.axis[1]), num(c.axis[2])}},
            {"N", c.N},
            {"schedule", c.schedule},
            {"model", c.model},
            {"tau", num(c.tau)},
            {"s_points", c.s_points},
            {"counter_diabatic", c.counter_diabatic},
            {"omega_tau_min", num(c.omega_tau_min)},
            {"omega_tau_max", num(c.omega_tau_max)},
            {"grid_points", c.grid_points},
            {"n_min", c.n_min},
            {"n_max", c.n_max},
            {"with_time", c.with_time},
            {"fidelity_target", num(c.fidelity_target)},
            {"norm", c.norm},
            {"target", c.target},
            {"steps", c.steps},
            {"out", c.out},
            {"seed", c.seed}};
}

void apply_json(RunConfig& c, const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "command") c.command = v.get<std::string>();
            else if (key == "n") c.n = v.get<int>();
            else if (key == "theta0") c.theta0 = v.get<double>();
            else if (key == "omega_tau") c.omega_tau = v.get<double>();
            else if (key == "phi") c.phi = v.get<double>();
            else if (key == "axis") c.axis = v.get<std::array<double, 3>>();
            else if (key == "N") c.N = v.get<std::size_t>();
            else if (key == "schedule") c.schedule = v.get<std::string>();
            else if (key == "model") c.model = v.get<std::string>();
            else if (key == "tau") c.tau = v.get<double>();
            else if (key == "s_points") c.s_points = v.get<std::size_t>();
            else if (key == "counter_diabatic") c.counter_diabatic = v.get<bool>();
            else if (key == "omega_tau_min") c.omega_tau_min = v.get<double>();
            else if (key == "omega_tau_max") c.omega_tau_max = v.get<double>();
            else if (key == "grid_points") c.grid_points = v.get<std::size_t>();
            else if (key == "n_min") c.n_min = v.get<std::size_t>();
            else if (key == "n_max") c.n_max = v.get<std::size_t>();
            else if (key == "with_time") c.with_time = v.get<bool>();
            else if (key == "fidelity_target") c.fidelity_target = v.get<double>();
            else if (key == "norm") c.norm = v.get<std::string>();
            else if (key == "target") c.target = v.get<std::string>();
            else if (key == "steps") c.steps = v.get<std::size_t>();
            else if (key == "out") c.out = v.get<std::string>();
            else if (key == "seed") c.seed = v.get<std::uint64_t>();
            else throw ConfigError("unknown config key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

RunConfig parse_command_line(int argc, const char* const* argv) {
    RunConfig c = base_config(argc, argv);
    CLI::App app{"stalab"};
    std::string config_path;
    std::string seed_text;
    build_app(app, c, config_path, seed_text);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    c.command = app.get_subcommands().front()->get_name();
    if (!seed_text.empty()) {
        c.seed = parse_seed(seed_text);
    }
    return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& diag) {
    if (c.command == "gate-cost") return cmd_gate_cost(c, out);
    if (c.command == "theta-opt") return cmd_theta_opt(c, out);
    if (c.command == "fig1") return cmd_fig1(c, out, diag);
    if (c.command == "grover-spectrum") return cmd_grover_spectrum(c, out);
    if (c.command == "grover-cost") return cmd_grover_cost(c, out);
    if (c.command == "evolve") return cmd_evolve(c, out);
    if (c.command == "time-to-solution") return cmd_time_to_solution(c, out, diag);
    if (c.command == "table1") return cmd_table1(c, out, diag);
    throw ConfigError("unknown command '" + c.command + "'");
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& diag) {
    RunConfig c;
    try {
        c = base_config(argc, argv);
        CLI::App app{"stalab: energetic cost of superadiabatic gates and search"};
        std::string config_path;
        std::string seed_text;
        build_app(app, c, config_path, seed_text);
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            diag << "error: " << e.what() << "\n\n" << app.help();
            return kExitConfig;
        }
        c.command = app.get_subcommands().front()->get_name();
        if (!seed_text.empty()) {
            c.seed = parse_seed(seed_text);
        }
    } catch (const Error& e) {
        diag << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    try {
        return run(c, out, diag);
    } catch (const NumericalFailure& e) {
        diag << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const RangeExhausted& e) {
        diag << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const DegenerateInput& e) {
        diag << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const Error& e) {
        diag << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

} // namespace stalab::cli
