// Copyright 2026 The srent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace srent::acceptance {

inline constexpr int kCriterionCount = 10;
inline constexpr std::uint64_t kDefaultSeed = 20261015;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    /// Wall-clock budget; 0 when the criterion has none.
    double limit_seconds = 0.0;
};

/// Runs criterion `id` (1-based). Exceeding the time budget counts as a failure.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);

/// Runs every criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 name (1.23 s): detail"
std::string format(const CriterionResult& result);

}  // namespace srent::acceptance
