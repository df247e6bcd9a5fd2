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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "stalab/cli.hpp"
#include "stalab/report.hpp"

using namespace stalab;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string diag;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "stalab");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, diag;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, diag);
    return {code, out.str(), diag.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "stalab_test_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

} // namespace

TEST_CASE("number formatting") {
    CHECK(report::format_number(0.1) == "0.1");
    CHECK(report::format_number(2.0 / 3.0) == "0.666666666667");
    CHECK(report::format_number(1e-30) == "1e-30");
    CHECK(report::format_number(INFINITY) == "inf");
    CHECK(report::format_number(-INFINITY) == "-inf");
    CHECK(report::format_number(NAN) == "nan");
    CHECK(report::round_significant(2.0 / 3.0) == 0.666666666667);
}

TEST_CASE("csv") {
    CHECK(report::csv_escape("plain") == "plain");
    CHECK(report::csv_escape("a,b") == "\"a,b\"");
    CHECK(report::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    report::CsvTable t({"x", "y"});
    t.add_numeric_row({1.0, 0.5});
    t.add_row({"a\nb", "c"});
    CHECK(t.rows() == 2);
    CHECK(t.str() == "x,y\n1,0.5\n\"a\nb\",c\n");
}

TEST_CASE("atomic write") {
    const auto p = scratch("atomic.txt");
    report::write_atomic(p.string(), "first");
    report::write_atomic(p.string(), "second");
    CHECK(slurp(p) == "second");
    CHECK(!std::filesystem::exists(p.string() + ".tmp"));
    CHECK_THROWS_AS(report::write_atomic("/nonexistent-dir/x.csv", "x"), InvalidData);
}

TEST_CASE("svg plot") {
    const auto svg = report::svg_plot({{"t", "x", "y", true, {{"a", {0.01, 1, 100}, {1, 2, 3}}}}});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("config precedence") {
    const auto cfg_path = scratch("cfg.json");
    std::ofstream(cfg_path) << R"({"omega_tau": 0.5, "theta0": 2.0, "seed": 11})";
    ::unsetenv("STA_SEED");

    auto c = cli::parse_command_line(3, std::vector<const char*>{"stalab", "gate-cost", "--n=1"}.data());
    CHECK(c.command == "gate-cost");
    CHECK(c.omega_tau == 1.0);
    CHECK(c.n == 1);

    const std::vector<std::string> args{"stalab", "gate-cost", "--config", cfg_path.string(), "--theta0", "1.5"};
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    c = cli::parse_command_line(static_cast<int>(argv.size()), argv.data());
    CHECK(c.omega_tau == 0.5);
    CHECK(c.theta0 == 1.5);
    CHECK(c.seed == 11);

    ::setenv("STA_SEED", "42", 1);
    c = cli::parse_command_line(2, std::vector<const char*>{"stalab", "evolve"}.data());
    CHECK(c.seed == 42);
    c = cli::parse_command_line(static_cast<int>(argv.size()), argv.data());
    CHECK(c.seed == 11);
    ::unsetenv("STA_SEED");

    cli::RunConfig r;
    CHECK_THROWS_AS(cli::apply_json(r, nlohmann::json{{"colour", 1}}), cli::ConfigError);
    cli::apply_json(r, cli::to_json(c));
    CHECK(cli::to_json(r) == cli::to_json(c));
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == cli::kExitConfig);
    CHECK(invoke({"frobnicate"}).code == cli::kExitConfig);
    CHECK(invoke({"gate-cost", "--theta0", "5"}).code == cli::kExitConfig);
    CHECK(invoke({"gate-cost", "--no-such-flag"}).code == cli::kExitConfig);
CHECK(invoke({"time-to-solution", "--n-min", "8", "--n-max", "512"}).code == cli::kExitConfig);
}

TEST_CASE("gate cost output") {
    const auto r = invoke({"gate-cost", "--n", "0", "--omega-tau", "1.5707963267948966", "--theta0",
                           "3.141592653589793"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["sigma"].get<double>() == doctest::Approx(2.8284271247).epsilon(1e-9));
    CHECK(j["closed_form"].get<double>() == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(j.contains("paper_ref"));
    CHECK(j.contains("config"));
}

TEST_CASE("theta-opt output") {
    const auto r = invoke({"theta-opt", "--omega-tau", "1e-6"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["theta_min"].get<double>() - 2.331122) < 1e-6);
}

TEST_CASE("runs are byte-identical") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"evolve", "--n", "1", "--omega-tau", "0.3", "--cd", "--seed", "5"},
          std::vector<std::string>{"grover-spectrum", "--N", "16", "--schedule", "nlno"},
          std::vector<std::string>{"fig1", "--points", "7"}}) {
        const auto a = invoke(args);
        const auto b = invoke(args);
        CHECK(a.code == cli::kExitOk);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("fig1 files") {
    const auto csv = scratch("fig1.csv");
    std::filesystem::remove(csv);
    const auto r = invoke({"fig1", "--out", csv.string()});
    REQUIRE(r.code == cli::kExitOk);
    const auto rows = lines(slurp(csv));
    REQUIRE(rows.size() == 30);
    CHECK(rows[0] == "omega_tau,theta_min,sigma_rel,avg_cost_at_min");
    double last = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double theta = std::stod(rows[i].substr(rows[i].find(',') + 1));
        CHECK(theta > last);
        last = theta;
    }
    auto svg = csv;
    svg.replace_extension(".svg");
    CHECK(std::filesystem::exists(svg));
    CHECK(invoke({"fig1", "--omega-tau-min", "1e-7"}).code == cli::kExitConfig);
}

TEST_CASE("table1 rows") {
    const auto r = invoke({"table1"});
    REQUIRE(r.code == cli::kExitOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].rfind("model,frobenius_slope,spectral_slope", 0) == 0);
    CHECK(r.diag.find("[table1]") != std::string::npos);
}
