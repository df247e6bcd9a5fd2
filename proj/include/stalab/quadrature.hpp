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

#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace stalab::quad {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-300;
    std::size_t max_evaluations = 100000;
    std::size_t min_panels = 1;
    bool keep_trace = true;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    std::size_t panels = 0;
    /// (s, integrand) at the nodes of the accepted panels, ascending in s.
    std::vector<std::pair<double, double>> trace;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(std::size_t n);

/**
 * Globally adaptive composite Gauss-Legendre integration of @p fn over [a, b]
 * with 15-point panels. The panel with the largest disagreement between its
 * own estimate and the sum of its two halves is bisected until the summed
 * disagreement drops below max(abs_tol, rel_tol * |value|).
 *
 * Throws QuadratureFailure (with the best estimate) if max_evaluations is hit.
 */
QuadratureResult integrate(const std::function<double(double)>& fn, double a, double b,
                           const QuadratureSpec& spec = {});

} // namespace stalab::quad
