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
 * Command-line front end. Settings are resolved as command-line flags, then
 * the JSON file named by --config, then built-in defaults; STA_SEED replaces
 * only the default seed.
 *
 * Exit codes: 0 success, 1 configuration error, 2 numerical failure.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "stalab/errors.hpp"

namespace stalab::cli {

class ConfigError : public Error {
public:
    using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

struct RunConfig {
    std::string command;

    // controlled-evolution gate
    int n = 0;
    double theta0 = 3.141592653589793;
    double omega_tau = 1.0;
    double phi = 3.141592653589793;
    std::array<double, 3> axis{0.0, 0.0, 1.0};

    // search
    std::size_t N = 8;
    std::string schedule = "linear";
    std::string model = "local_adiabatic";
    double tau = 1.0;
    std::size_t s_points = 21;
    bool counter_diabatic = false;

    // sweeps; zero sizes select the command's own range
    double omega_tau_min = 1e-4;
    double omega_tau_max = 1e3;
    std::size_t grid_points = 29;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    bool with_time = false;
    double fidelity_target = 0.9;

    std::string norm = "frobenius";
    std::string target = "ce";
    std::size_t steps = 0; ///< 0 selects the adaptive default
    std::string out;       ///< empty writes to standard output
    std::uint64_t seed = 0;
};

const std::vector<std::string>& commands();

nlohmann::json to_json(const RunConfig& config);
/// Overlays the keys present in @p j. Unknown keys raise ConfigError.
void apply_json(RunConfig& config, const nlohmann::json& j);

/// Parses flags (argv[1..]) on top of file, environment and default settings.
RunConfig parse_command_line(int argc, const char* const* argv);

/// Executes config.command. Reports go to @p out unless config.out is set.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// parse_command_line + run with exit-code mapping.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& diag);

} // namespace stalab::cli
