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

// Independent reference computations used by the test suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stalab/qcore.hpp"
#include "stalab/rng.hpp"

namespace stalab::testing {

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

/// Central difference of a vector-valued curve.
inline CVector central_diff(const std::function<CVector(double)>& f, double s, double h = 1e-6) {
    return (f(s + h) - f(s - h)) / (2.0 * h);
}

/// One-sided second-order difference for curves evaluated at an endpoint.
inline CVector one_sided_diff(const std::function<CVector(double)>& f, double s, double h,
                              bool forward) {
    if (forward) {
        return (-3.0 * f(s) + 4.0 * f(s + h) - f(s + 2 * h)) / (2.0 * h);
    }
    return (3.0 * f(s) - 4.0 * f(s - h) + f(s - 2 * h)) / (2.0 * h);
}

/// Sorted eigenvalues from a plain Eigen solve, bypassing the library wrapper.
inline std::vector<double> dense_eigenvalues(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end());
    return v;
}

/// Simpson's rule on a uniform grid; a deliberately naive cross-check.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels % 2) {
        ++panels;
    }
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) {
        sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    }
    return sum * h / 3.0;
}

/// Plain bisection on a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
    double flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) {
            break;
        }
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Random Hermitian matrix with Gaussian entries.
inline CMatrix random_hermitian(std::size_t dim, CounterRng& rng) {
    CMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = complex(2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
        }
    }
    return (m + m.adjoint()) / 2.0;
}

} // namespace stalab::testing
