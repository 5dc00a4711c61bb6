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

#include "srent/circuit.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "srent/errors.hpp"

namespace srent {

bool Gate::is_clifford() const {
    if (kind != GateKind::kPhase) return true;
    const double quarter = theta / (std::numbers::pi / 2);
    return std::abs(quarter - std::round(quarter)) < 1e-12;
}

CMatrix Gate::matrix() const {
    switch (kind) {
        case GateKind::kH:
            return gates::h();
        case GateKind::kS:
            return gates::s();
        case GateKind::kX:
            return gates::x();
        case GateKind::kZ:
            return gates::z();
        case GateKind::kCnot:
            return gates::cnot();
        case GateKind::kPhase:
            return gates::phase(theta);
    }
    return gates::identity();
}

namespace {

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

int parse_qubit(const std::string& word, int line_no) {
    int q = -1;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), q);
    if (ec != std::errc() || ptr != word.data() + word.size() || q < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": bad qubit index '" + word + "'");
    }
    return q;
}

}  // namespace

Circuit Circuit::parse(std::string_view text, int num_qubits) {
    Circuit c;
    int max_qubit = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto words = split_words(line);
        if (words.empty()) continue;

        const std::string& op = words[0];
        auto expect = [&](std::size_t count) {
            if (words.size() != count) {
                throw ParseError("line " + std::to_string(line_no) + ": wrong operand count for " + op);
            }
        };
        Gate g;
        if (op == "H" || op == "S" || op == "X" || op == "Z" || op == "T") {
            expect(2);
            const int q = parse_qubit(words[1], line_no);
            g = op == "H"   ? Gate::h(q)
                : op == "S" ? Gate::s(q)
                : op == "X" ? Gate::x(q)
                : op == "Z" ? Gate::z(q)
                            : Gate::phase(q, std::numbers::pi / 4);
        } else if (op == "CNOT" || op == "CX") {
            expect(3);
            g = Gate::cnot(parse_qubit(words[1], line_no), parse_qubit(words[2], line_no));
            if (g.qubits[0] == g.qubits[1]) {
                throw ParseError("line " + std::to_string(line_no) + ": CNOT control equals target");
            }
        } else if (op == "PHASE") {
            expect(3);
            double theta = 0.0;
            try {
                std::size_t used = 0;
                theta = std::stod(words[2], &used);
                if (used != words[2].size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad angle '" + words[2] + "'");
            }
            g = Gate::phase(parse_qubit(words[1], line_no), theta);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown gate '" + op + "'");
        }
        for (int i = 0; i < g.arity(); ++i) max_qubit = std::max(max_qubit, g.qubits[static_cast<std::size_t>(i)]);
        c.gates.push_back(g);
    }
    if (num_qubits == 0) {
        c.num_qubits = std::max(1, max_qubit + 1);
    } else {
        if (max_qubit >= num_qubits) throw ParseError("circuit uses a qubit beyond the register size");
        c.num_qubits = num_qubits;
    }
    return c;
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    out.precision(17);
    for (const auto& g : gates) {
        switch (g.kind) {
            case GateKind::kH:
                out << "H " << g.qubits[0];
                break;
            case GateKind::kS:
                out << "S " << g.qubits[0];
                break;
            case GateKind::kX:
                out << "X " << g.qubits[0];
                break;
            case GateKind::kZ:
                out << "Z " << g.qubits[0];
                break;
            case GateKind::kCnot:
                out << "CNOT " << g.qubits[0] << ' ' << g.qubits[1];
                break;
            case GateKind::kPhase:
                out << "PHASE " << g.qubits[0] << ' ' << g.theta;
                break;
        }
        out << '\n';
    }
    return out.str();
}

int Circuit::non_clifford_count() const {
    int count = 0;
    for (const auto& g : gates) count += g.is_clifford() ? 0 : 1;
    return count;
}

namespace circuits {

void apply_inplace(CVector& amplitudes, int n, const Gate& gate) {
    const std::span<const int> targets(gate.qubits.data(), static_cast<std::size_t>(gate.arity()));
    states::apply_gate_inplace(amplitudes, n, gate.matrix(), targets);
}

StateVector apply(const Circuit& circuit, const StateVector& psi) {
    if (psi.num_qubits() != circuit.num_qubits) throw DimensionError("circuit and state qubit counts differ");
    CVector amps = psi.amplitudes();
    for (const auto& g : circuit.gates) apply_inplace(amps, circuit.num_qubits, g);
    return StateVector::normalized(circuit.num_qubits, std::move(amps));
}

UnitaryMatrix to_unitary(const Circuit& circuit) {
    const int n = circuit.num_qubits;
    const auto d = Eigen::Index{1} << n;
    CMatrix u = CMatrix::Identity(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        CVector col = u.col(c);
        for (const auto& g : circuit.gates) apply_inplace(col, n, g);
        u.col(c) = col;
    }
    return UnitaryMatrix(n, std::move(u));
}

}  // namespace circuits

}  // namespace srent
