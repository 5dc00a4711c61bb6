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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "srent/states.hpp"

namespace srent {

enum class GateKind { kH, kS, kX, kZ, kCnot, kPhase };

/// One gate of the text circuit format. `theta` is only meaningful for kPhase.
struct Gate {
    GateKind kind = GateKind::kH;
    std::array<int, 2> qubits{0, 0};
    double theta = 0.0;

    static Gate h(int q) { return {GateKind::kH, {q, 0}, 0.0}; }
    static Gate s(int q) { return {GateKind::kS, {q, 0}, 0.0}; }
    static Gate x(int q) { return {GateKind::kX, {q, 0}, 0.0}; }
    static Gate z(int q) { return {GateKind::kZ, {q, 0}, 0.0}; }
    static Gate cnot(int control, int target) { return {GateKind::kCnot, {control, target}, 0.0}; }
    static Gate phase(int q, double theta) { return {GateKind::kPhase, {q, 0}, theta}; }

    int arity() const { return kind == GateKind::kCnot ? 2 : 1; }
    bool is_clifford() const;
    CMatrix matrix() const;

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate list on a fixed register; gates apply in list order.
struct Circuit {
    int num_qubits = 1;
    std::vector<Gate> gates;

    /// Line format: "H 0", "S 2", "X 1", "Z 1", "CNOT 0 1", "PHASE 0 0.785398163",
    /// plus "T q" as shorthand for PHASE q pi/4. Blank lines and '#' comments
    /// are ignored. When num_qubits is 0 the register size is inferred from the
    /// largest qubit index.
    static Circuit parse(std::string_view text, int num_qubits = 0);
    std::string to_text() const;

    /// Number of non-Clifford phase gates.
    int non_clifford_count() const;
};

namespace circuits {

void apply_inplace(CVector& amplitudes, int n, const Gate& gate);
StateVector apply(const Circuit& circuit, const StateVector& psi);
UnitaryMatrix to_unitary(const Circuit& circuit);

}  // namespace circuits

}  // namespace srent
