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

#include <stdexcept>
#include <string>

namespace stalab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad dimension, angle out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative method failed to converge or produced non-finite values.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// A projection or normalization hit a zero-norm vector.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// tan(theta0/2) < theta0: no real omega*tau solves the critical-angle condition.
class InfeasibleAngle : public DomainError {
public:
    using DomainError::DomainError;
};

/// A schedule lacks the analytic derivatives an operation needs.
class UnsupportedSchedule : public Error {
public:
    using Error::Error;
};

/// Regression input contained non-positive or non-finite data.
class InvalidData : public Error {
public:
    using Error::Error;
};

/// A bracketing search ran past its configured limits.
class RangeExhausted : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature stopped before reaching its tolerance.
class QuadratureFailure : public NumericalFailure {
public:
    QuadratureFailure(const std::string& what, double estimate, double error_bound)
        : NumericalFailure(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

} // namespace stalab
