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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "srent/circuit.hpp"
#include "srent/clifford.hpp"
#include "srent/errors.hpp"
#include "srent/pauli.hpp"

namespace srent {
namespace {

/// M Lambda M^T = Lambda over GF(2) with Lambda = direct sum of [[0,1],[1,0]].
bool binary_symplectic(const std::vector<std::vector<std::uint8_t>>& m) {
    const std::size_t nn = m.size();
    for (std::size_t a = 0; a < nn; ++a) {
        for (std::size_t b = 0; b < nn; ++b) {
            int v = 0;
            for (std::size_t k = 0; k < nn; k += 2) v ^= (m[a][k] & m[b][k + 1]) ^ (m[a][k + 1] & m[b][k]);
            const int lambda = (a / 2 == b / 2 && a != b) ? 1 : 0;
            if (v != lambda) return false;
        }
    }
    return true;
}

std::string symplectic_key(const CliffordTableau& t) {
    std::string k;
    for (const auto& row : t.symplectic_matrix())
        for (auto b : row) k += static_cast<char>('0' + b);
    return k;
}

/// Exhaustive single-qubit Clifford group as tableau keys, from closure under H and S.
std::set<std::string> single_qubit_group() {
    std::set<std::string> seen{CliffordTableau::identity(1).key()};
    std::vector<CliffordTableau> frontier{CliffordTableau::identity(1)};
    while (!frontier.empty()) {
        std::vector<CliffordTableau> next;
        for (const auto& t : frontier) {
            for (const auto& g : {Gate::h(0), Gate::s(0)}) {
                const auto u = clifford::compose(CliffordTableau::from_gate(1, g), t);
                if (seen.insert(u.key()).second) next.push_back(u);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

/// Checks U P U^dag = sign Q densely for every Pauli.
void expect_conjugation_matches(const CliffordTableau& t, const CMatrix& u) {
    for (const auto& p : pauli::enumerate(t.num_qubits())) {
        const auto image = clifford::conjugate_pauli(t, p);
        const CMatrix lhs = u * testing::dense_pauli(p.label()) * u.adjoint();
        const CMatrix rhs = static_cast<double>(image.sign) * testing::dense_pauli(image.pauli.label());
        EXPECT_LT((lhs - rhs).norm(), 1e-10) << p.label();
    }
}

TEST(Clifford, ConjugationExamples) {
    const auto h = CliffordTableau::from_gate(1, Gate::h(0));
    const auto hx = clifford::conjugate_pauli(h, PauliString::from_label("X"));
    EXPECT_EQ(hx.pauli, PauliString::from_label("Z"));
    EXPECT_EQ(hx.sign, 1);

    const auto s = CliffordTableau::from_gate(1, Gate::s(0));
    const auto sx = clifford::conjugate_pauli(s, PauliString::from_label("X"));
    EXPECT_EQ(sx.pauli, PauliString::from_label("Y"));
    EXPECT_EQ(sx.sign, 1);
    // Dense oracle for the same convention.
    const CMatrix dense_s = gates::s();
    EXPECT_LT((dense_s * testing::dense_pauli("X") * dense_s.adjoint() - testing::dense_pauli("Y")).norm(), 1e-14);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto c = clifford::random_clifford(3, seed);
        const auto id = clifford::conjugate_pauli(c, PauliString::identity(3));
        EXPECT_TRUE(id.pauli.is_identity());
        EXPECT_EQ(id.sign, 1);
    }
}

TEST(Clifford, GateTableausMatchDenseConjugation) {
    for (const auto& g : {Gate::h(1), Gate::s(0), Gate::x(2), Gate::z(1), Gate::cnot(0, 2), Gate::cnot(2, 1),
                          Gate::phase(1, 3.0 * std::numbers::pi / 2.0)}) {
        const Circuit c{3, {g}};
        expect_conjugation_matches(CliffordTableau::from_gate(3, g), circuits::to_unitary(c).entries());
    }
}

TEST(Clifford, RandomTableausAreSymplecticAndDeterministic) {
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto c = clifford::random_clifford(n, seed);
            EXPECT_TRUE(c.is_symplectic());
            EXPECT_TRUE(binary_symplectic(c.symplectic_matrix()));
            EXPECT_EQ(c, clifford::random_clifford(n, seed));
        }
    }
}

TEST(Clifford, SingleQubitSamplingIsUniform) {
    const auto group = single_qubit_group();
    ASSERT_EQ(group.size(), 24u);
    std::map<std::string, int> counts;
    constexpr int kSamples = 100000;
    Rng rng(2024);
    for (int i = 0; i < kSamples; ++i) ++counts[clifford::random_clifford(1, rng).key()];
    EXPECT_EQ(counts.size(), 24u);
    const double p = 1.0 / 24.0;
    const double se = std::sqrt(p * (1.0 - p) / kSamples);
    for (const auto& [key, count] : counts) {
        EXPECT_TRUE(group.count(key)) << key;
        EXPECT_LT(std::abs(count / static_cast<double>(kSamples) - p), 5.0 * se) << key;
    }
}

TEST(Clifford, TwoQubitSamplingCoversTheSymplecticGroup) {
    // |Sp(4, 2)| = 720.
    std::set<std::string> seen;
    Rng rng(77);
    for (int i = 0; i < 20000; ++i) seen.insert(symplectic_key(clifford::random_clifford(2, rng)));
    EXPECT_EQ(seen.size(), 720u);
}

TEST(Clifford, SynthesisExamples) {
    const auto id = clifford::to_circuit(CliffordTableau::identity(3));
    EXPECT_LT(testing::phase_distance(circuits::to_unitary(id).entries(), CMatrix::Identity(8, 8)), 1e-10);

    const auto h = clifford::to_circuit(CliffordTableau::from_gate(1, Gate::h(0)));
    EXPECT_LT(testing::phase_distance(circuits::to_unitary(h).entries(), testing::dense_h()), 1e-10);
}

TEST(Clifford, SynthesizedCircuitsReproduceConjugation) {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto t = clifford::random_clifford(n, 1000 + seed);
            const auto circuit = clifford::to_circuit(t);
            for (const auto& g : circuit.gates) EXPECT_TRUE(g.is_clifford());
            expect_conjugation_matches(t, circuits::to_unitary(circuit).entries());
            EXPECT_EQ(CliffordTableau::from_circuit(circuit), t);
        }
    }
}

TEST(Clifford, CompositionMatchesDenseProduct) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = clifford::random_clifford(2, seed);
        const auto b = clifford::random_clifford(2, seed + 100);
        const auto ab = clifford::compose(a, b);
        EXPECT_TRUE(ab.is_symplectic());
        const CMatrix dense = clifford::to_unitary(a).entries() * clifford::to_unitary(b).entries();
        EXPECT_LT(testing::phase_distance(clifford::to_unitary(ab).entries(), dense), 1e-10);
    }
}

TEST(Clifford, ConjugationPreservesCommutation) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto c = clifford::random_clifford(2, seed);
        for (const auto& p : pauli::enumerate(2)) {
            for (const auto& q : pauli::enumerate(2)) {
                EXPECT_EQ(pauli::commutes(p, q), pauli::commutes(clifford::conjugate_pauli(c, p).pauli,
                                                                 clifford::conjugate_pauli(c, q).pauli));
            }
        }
    }
}

TEST(Clifford, FromImagesRejectsNonSymplecticInput) {
    const auto x = PauliString::from_label("X");
    EXPECT_THROW(CliffordTableau::from_images({{x, 1}}, {{x, 1}}), DomainError);
    EXPECT_THROW(CliffordTableau::from_gate(1, Gate::phase(0, 0.3)), DomainError);
}

TEST(Clifford, StabilizerStateCounts) {
    EXPECT_EQ(clifford::enumerate_stabilizer_states(1).size(), 6u);
    EXPECT_EQ(clifford::enumerate_stabilizer_states(2).size(), 60u);
    EXPECT_EQ(clifford::enumerate_stabilizer_states(3).size(), 1080u);
    EXPECT_EQ(clifford::stabilizer_state_count(4), 36720u);
    EXPECT_THROW(clifford::enumerate_stabilizer_states(4), CostGuardError);
    EXPECT_THROW(clifford::enumerate_stabilizer_states(5, true), CostGuardError);
}

TEST(Clifford, StabilizerStatesHaveFullPauliStabilizer) {
    // A pure state is a stabilizer state iff sum_P <P>^4 = d.
    for (int n = 1; n <= 3; ++n) {
        for (const auto& s : clifford::stabilizer_states(n).states) {
            double s4 = 0.0;
            for (const auto& l : testing::all_labels(n)) s4 += std::pow(testing::dense_expectation(l, s.amplitudes()), 4);
            EXPECT_NEAR(s4, static_cast<double>(s.dim()), 1e-9);
        }
    }
}

TEST(Clifford, StabilizerSetIsClosedUnderCliffords) {
    for (int n = 1; n <= 3; ++n) {
        const auto& set = clifford::stabilizer_states(n);
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto c = clifford::random_clifford(n, seed);
            for (const auto& s : set.states) EXPECT_TRUE(set.contains(clifford::apply(c, s)));
        }
        EXPECT_FALSE(set.contains(StateVector::magic_h(n)));
    }
}

TEST(Circuit, ParsesTextFormat) {
    const auto c = Circuit::parse("# demo\nH 0\nS 2\n\nCNOT 0 1\nCX 1 2\nPHASE 0 0.785398163\nT 1\nX 0\nZ 2\n");
    EXPECT_EQ(c.num_qubits, 3);
    ASSERT_EQ(c.gates.size(), 8u);
    EXPECT_EQ(c.gates[2], Gate::cnot(0, 1));
    EXPECT_NEAR(c.gates[4].theta, 0.785398163, 1e-15);
    EXPECT_EQ(c.non_clifford_count(), 2);
    const auto again = Circuit::parse(c.to_text(), 3);
    EXPECT_LT((circuits::to_unitary(again).entries() - circuits::to_unitary(c).entries()).norm(), 1e-12);

    EXPECT_THROW(Circuit::parse("FOO 0"), ParseError);
    EXPECT_THROW(Circuit::parse("CNOT 0 0"), ParseError);
    EXPECT_THROW(Circuit::parse("H"), ParseError);
    EXPECT_THROW(Circuit::parse("PHASE 0 abc"), ParseError);
    EXPECT_THROW(Circuit::parse("H 3", 2), ParseError);
}

}  // namespace
}  // namespace srent
