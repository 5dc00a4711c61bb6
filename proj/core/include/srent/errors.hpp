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

#include <stdexcept>
#include <string>

namespace srent {

/// Operands disagree on qubit count or matrix size.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Input violates a numerical precondition (normalization, trace, hermiticity, alpha < 0, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Requested size exceeds a cost guard. Pass the explicit override to proceed anyway.
class CostGuardError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A Monte Carlo estimator produced an unusable aggregate (e.g. a nonpositive mean under a log).
class EstimationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input: state files, circuit files, Pauli labels.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace srent
