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

// Runs every acceptance criterion and prints one line per criterion.
// Usage: srent_acceptance [seed]

#include <cstdlib>
#include <iostream>
#include <string>

#include "srent/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = srent::acceptance::kDefaultSeed;
    if (argc > 1) seed = std::stoull(argv[1]);
    std::cout << "acceptance seed " << seed << "\n";
    int failed = 0;
    srent::acceptance::run_all(seed, [&](const srent::acceptance::CriterionResult& r) {
        std::cout << srent::acceptance::format(r) << std::endl;
        failed += r.passed ? 0 : 1;
    });
    std::cout << (srent::acceptance::kCriterionCount - failed) << "/" << srent::acceptance::kCriterionCount
              << " criteria passed\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
