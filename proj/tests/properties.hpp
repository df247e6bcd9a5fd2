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
 * Randomized invariants shared by the unit runner and the acceptance binary.
 * Each property draws its cases from a CounterRng seeded by the caller.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stalab::testing {

inline constexpr std::size_t kRandomCases = 100;

struct PropertyOutcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool passed() const { return cases > 0 && failures == 0; }
};

struct Property {
    std::string module;
    std::string name;
    std::function<PropertyOutcome(std::uint64_t seed)> run;
};

const std::vector<Property>& properties();

} // namespace stalab::testing
