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
#include <numbers>

#include "doctest.h"
#include "stalab/errors.hpp"
#include "stalab/quadrature.hpp"

using namespace stalab;
using namespace stalab::quad;

TEST_CASE("Gauss-Legendre rules") {
    for (std::size_t n : {1, 2, 5, 15}) {
        const auto r = gauss_legendre(n);
        REQUIRE(r.nodes.size() == n);
        double w = 0;
        for (double x : r.weights) {
            w += x;
        }
        CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
        // exact for degree 2n - 1
        double moment = 0;
        for (std::size_t i = 0; i < n; ++i) {
            moment += r.weights[i] * std::pow(r.nodes[i], 2 * n - 2);
        }
        CHECK(moment == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
    }
    const auto two = gauss_legendre(2);
    CHECK(std::abs(std::abs(two.nodes[0]) - 1 / std::sqrt(3.0)) < 1e-15);
    CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("smooth integrands") {
    const auto r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r.evaluations >= 15);
    const auto c = integrate([](double) { return std::sqrt(2.0); }, 0.0, 1.0);
    CHECK(c.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("narrow peaks are refined") {
    const double eps = 1e-6;
    auto f = [eps](double x) { return eps / ((x - 0.5) * (x - 0.5) + eps * eps); };
    const auto r = integrate(f, 0.0, 1.0);
    const double exact = 2.0 * std::atan(0.5 / eps);
    CHECK(std::abs(r.value - exact) / exact < 1e-9);
    CHECK(r.panels > 10);
}

TEST_CASE("trace is sorted and within the interval") {
    const auto r = integrate([](double x) { return std::exp(x); }, -1.0, 2.0);
    REQUIRE(!r.trace.empty());
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        CHECK(r.trace[i - 1].first <= r.trace[i].first);
    }
    CHECK(r.trace.front().first > -1.0);
    CHECK(r.trace.back().first < 2.0);
    QuadratureSpec no_trace;
    no_trace.keep_trace = false;
    CHECK(integrate([](double x) { return x; }, 0.0, 1.0, no_trace).trace.empty());
}

TEST_CASE("minimum panel count") {
    QuadratureSpec spec;
    spec.min_panels = 64;
    const auto r = integrate([](double x) { return x * x; }, 0.0, 1.0, spec);
    CHECK(r.panels >= 64);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("failures") {
    QuadratureSpec tight;
    tight.max_evaluations = 1000;
    try {
        integrate([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3)); }, 0.0, 1.0, tight);
        FAIL("expected QuadratureFailure");
    } catch (const QuadratureFailure& e) {
        const double exact = 2 * std::sqrt(0.3) + 2 * std::sqrt(0.7);
        CHECK(std::abs(e.estimate() - exact) < e.error_bound());
    }
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), NumericalFailure);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0), DomainError);
}
