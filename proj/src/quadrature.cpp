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

#include "stalab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "stalab/errors.hpp"

namespace stalab::quad {

namespace {

constexpr std::size_t kPanelOrder = 15;

struct RuleEval {
    double value = 0.0;
    std::vector<std::pair<double, double>> samples;
};

struct Panel {
    double a, b;
    RuleEval left, right;
    double err;

    double value() const { return left.value + right.value; }
};

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

} // namespace

GaussRule gauss_legendre(std::size_t n) {
    if (n == 0) {
        throw DomainError("Gauss-Legendre rule needs at least one node");
    }
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double kd = static_cast<double>(k);
                const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p0 = 1.0;
                p1 = x;
            }
            dp = nd * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // recompute the derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double kd = static_cast<double>(k);
            const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
            p0 = p1;
            p1 = p2;
        }
        dp = n == 1 ? 1.0 : nd * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

QuadratureResult integrate(const std::function<double(double)>& fn, double a, double b,
                           const QuadratureSpec& spec) {
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integration interval must be finite with b > a");
    }
    static const GaussRule rule = gauss_legendre(kPanelOrder);

    std::size_t evaluations = 0;
    auto eval = [&](double lo, double hi) {
        RuleEval r;
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        r.samples.reserve(kPanelOrder);
        for (std::size_t k = 0; k < kPanelOrder; ++k) {
            const double x = mid + half * rule.nodes[k];
            const double y = fn(x);
            if (!std::isfinite(y)) {
                throw NumericalFailure("integrand is not finite at s = " + std::to_string(x));
            }
            r.value += rule.weights[k] * y;
            r.samples.emplace_back(x, y);
        }
        r.value *= half;
        evaluations += kPanelOrder;
        return r;
    };
    auto make_panel = [&](double lo, double hi, const RuleEval& whole) {
        const double mid = 0.5 * (lo + hi);
        Panel p{lo, hi, eval(lo, mid), eval(mid, hi), 0.0};
        p.err = std::abs(whole.value - p.value());
        return p;
    };

    std::vector<Panel> heap;
    const std::size_t start = std::max<std::size_t>(1, spec.min_panels);
    const double width = (b - a) / static_cast<double>(start);
    for (std::size_t i = 0; i < start; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = i + 1 == start ? b : lo + width;
        heap.push_back(make_panel(lo, hi, eval(lo, hi)));
    }
    std::make_heap(heap.begin(), heap.end(), ByError{});

    auto totals = [&heap] {
        double value = 0.0;
        double err = 0.0;
        for (const Panel& p : heap) {
            value += p.value();
            err += p.err;
        }
        return std::pair{value, err};
    };

    auto [value, err] = totals();
    std::size_t splits = 0;
    while (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (evaluations + 4 * kPanelOrder > spec.max_evaluations) {
            throw QuadratureFailure("adaptive quadrature hit its evaluation cap", value, err);
        }
        std::pop_heap(heap.begin(), heap.end(), ByError{});
        const Panel worst = std::move(heap.back());
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel lo = make_panel(worst.a, mid, worst.left);
        Panel hi = make_panel(mid, worst.b, worst.right);
        value += lo.value() + hi.value() - worst.value();
        err += lo.err + hi.err - worst.err;
        heap.push_back(std::move(lo));
        std::push_heap(heap.begin(), heap.end(), ByError{});
        heap.push_back(std::move(hi));
        std::push_heap(heap.begin(), heap.end(), ByError{});
        if (++splits % 64 == 0) {
            std::tie(value, err) = totals(); // keep the running sums from drifting
        }
    }

    QuadratureResult out;
    std::tie(out.value, out.error_estimate) = totals();
    out.evaluations = evaluations;
    out.panels = heap.size();
    if (spec.keep_trace) {
        for (const Panel& p : heap) {
            out.trace.insert(out.trace.end(), p.left.samples.begin(), p.left.samples.end());
            out.trace.insert(out.trace.end(), p.right.samples.begin(), p.right.samples.end());
        }
        std::sort(out.trace.begin(), out.trace.end());
    }
    return out;
}

} // namespace stalab::quad
