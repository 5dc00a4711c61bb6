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
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "srent/errors.hpp"
#include "srent/pauli.hpp"

namespace srent {
namespace {

using testing::dense_pauli;

TEST(Pauli, ProductExamples) {
    const auto x = PauliString::from_label("X");
    const auto z = PauliString::from_label("Z");
    const auto xx = pauli::mul(x, x);
    EXPECT_TRUE(xx.pauli.is_identity());
    EXPECT_EQ(xx.phase, Phase::kPlusOne);

    const auto xz = pauli::mul(x, z);
    EXPECT_EQ(xz.pauli, PauliString::from_label("Y"));
    EXPECT_EQ(xz.phase, Phase::kMinusI);

    const auto disjoint = pauli::mul(PauliString::from_label("XI"), PauliString::from_label("IZ"));
    EXPECT_EQ(disjoint.pauli, PauliString::from_label("XZ"));
    EXPECT_EQ(disjoint.phase, Phase::kPlusOne);
}

TEST(Pauli, ProductMatchesDenseMatrices) {
    for (const auto& a : testing::all_labels(2)) {
        for (const auto& b : testing::all_labels(2)) {
            const auto r = pauli::mul(PauliString::from_label(a), PauliString::from_label(b));
            const CMatrix lhs = dense_pauli(a) * dense_pauli(b);
            const CMatrix rhs = to_complex(r.phase) * dense_pauli(r.pauli.label());
            EXPECT_LT((lhs - rhs).norm(), 1e-12) << a << " * " << b;
        }
    }
}

TEST(Pauli, ProductIsAssociativeWithPhases) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = PauliString::from_index(3, rng.below(64));
        const auto q = PauliString::from_index(3, rng.below(64));
        const auto r = PauliString::from_index(3, rng.below(64));
        const auto pq = pauli::mul(p, q);
        const auto left = pauli::mul(pq.pauli, r);
        const auto qr = pauli::mul(q, r);
        const auto right = pauli::mul(p, qr.pauli);
        EXPECT_EQ(left.pauli, right.pauli);
        EXPECT_EQ((exponent(pq.phase) + exponent(left.phase)) % 4, (exponent(qr.phase) + exponent(right.phase)) % 4);
    }
}

TEST(Pauli, CommutationExamples) {
    EXPECT_FALSE(pauli::commutes(PauliString::from_label("X"), PauliString::from_label("Z")));
    EXPECT_TRUE(pauli::commutes(PauliString::from_label("XX"), PauliString::from_label("ZZ")));
    for (const auto& p : pauli::enumerate(2)) EXPECT_TRUE(pauli::commutes(p, PauliString::identity(2)));
}

TEST(Pauli, CommutationMatchesDenseCommutator) {
    for (const auto& a : testing::all_labels(2)) {
        for (const auto& b : testing::all_labels(2)) {
            const CMatrix pa = dense_pauli(a), pb = dense_pauli(b);
            const bool dense = (pa * pb - pb * pa).norm() < 1e-12;
            EXPECT_EQ(pauli::commutes(PauliString::from_label(a), PauliString::from_label(b)), dense);
        }
    }
}

TEST(Pauli, MismatchedSizesThrow) {
    EXPECT_THROW(pauli::mul(PauliString::identity(1), PauliString::identity(2)), DimensionError);
    EXPECT_THROW(pauli::commutes(PauliString::identity(1), PauliString::identity(2)), DimensionError);
    EXPECT_THROW(pauli::expectation(PauliString::identity(2), StateVector::zero(1)), DimensionError);
}

TEST(Pauli, ExpectationExamples) {
    EXPECT_DOUBLE_EQ(pauli::expectation(PauliString::from_label("Z"), StateVector::zero(1)), 1.0);
    const auto h = StateVector::magic_h(1);
    EXPECT_NEAR(pauli::expectation(PauliString::from_label("X"), h), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(pauli::expectation(PauliString::from_label("Y"), h), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(pauli::expectation(PauliString::from_label("Z"), h), 0.0, 1e-12);
}

TEST(Pauli, ConjugateMagicStateHasXMinusYDecomposition) {
    CVector v(2);
    v << 1.0, std::polar(1.0, -std::numbers::pi / 4.0);
    const StateVector conj = StateVector::normalized(1, v);
    EXPECT_NEAR(pauli::expectation(PauliString::from_label("X"), conj), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(pauli::expectation(PauliString::from_label("Y"), conj), -1.0 / std::sqrt(2.0), 1e-12);
    const CMatrix rho = conj.amplitudes() * conj.amplitudes().adjoint();
    const CMatrix expected = 0.5 * CMatrix::Identity(2, 2) +
                             (dense_pauli("X") - dense_pauli("Y")) / (2.0 * std::sqrt(2.0));
    EXPECT_LT((rho - expected).norm(), 1e-12);
}

TEST(Pauli, ExpectationMatchesDenseOracle) {
    Rng rng(3);
    for (int n = 1; n <= 4; ++n) {
        const CVector v = testing::random_vector(std::size_t{1} << n, rng);
        const StateVector psi(n, v);
        const auto spectrum = pauli::expectation_spectrum(psi);
        for (const auto& label : testing::all_labels(n)) {
            const auto p = PauliString::from_label(label);
            const double dense = testing::dense_expectation(label, v);
            EXPECT_NEAR(pauli::expectation(p, psi), dense, 1e-12) << label;
            EXPECT_NEAR(spectrum[p.index()], dense, 1e-12) << label;
        }
    }
}

TEST(Pauli, MixedExpectationExamples) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 0.75;
    m(1, 1) = 0.25;
    const DensityMatrix rho(1, m);
    EXPECT_NEAR(pauli::expectation_mixed(PauliString::from_label("Z"), rho), 0.5, 1e-15);
    EXPECT_NEAR(pauli::expectation_mixed(PauliString::identity(1), rho), 1.0, 1e-15);

    const auto mixed = DensityMatrix::maximally_mixed(2);
    for (const auto& p : pauli::enumerate(2)) {
        EXPECT_NEAR(pauli::expectation_mixed(p, mixed), p.is_identity() ? 1.0 : 0.0, 1e-15);
    }
}

TEST(Pauli, MixedSpectrumMatchesDenseTrace) {
    Rng rng(5);
    for (int n = 1; n <= 3; ++n) {
        const auto d = std::size_t{1} << n;
        const CVector a = testing::random_vector(d, rng), b = testing::random_vector(d, rng);
        const CMatrix m = 0.3 * a * a.adjoint() + 0.7 * b * b.adjoint();
        const DensityMatrix rho(n, m);
        const auto spectrum = pauli::expectation_spectrum(rho);
        for (const auto& label : testing::all_labels(n)) {
            const auto p = PauliString::from_label(label);
            const double dense = (dense_pauli(label) * m).trace().real();
            EXPECT_NEAR(spectrum[p.index()], dense, 1e-12);
            EXPECT_NEAR(pauli::expectation_mixed(p, rho), dense, 1e-12);
        }
    }
}

TEST(Pauli, ParsevalIdentities) {
    Rng rng(8);
    for (int n = 1; n <= 5; ++n) {
        const StateVector psi(n, testing::random_vector(std::size_t{1} << n, rng));
        double s = 0.0;
        for (double e : pauli::expectation_spectrum(psi)) s += e * e;
        EXPECT_NEAR(s, static_cast<double>(psi.dim()), 1e-9);
    }
    const auto d = 4;
    const CVector a = testing::random_vector(d, rng), b = testing::random_vector(d, rng);
    const DensityMatrix rho(2, 0.5 * a * a.adjoint() + 0.5 * b * b.adjoint());
    double s = 0.0;
    for (double e : pauli::expectation_spectrum(rho)) s += e * e;
    EXPECT_NEAR(s / d, states::purity(rho), 1e-12);
}

TEST(Pauli, CanonicalOrder) {
    std::vector<std::string> one;
    for (const auto& p : pauli::enumerate(1)) one.push_back(p.label());
    EXPECT_EQ(one, (std::vector<std::string>{"I", "X", "Z", "Y"}));

    std::set<std::string> two;
    std::size_t k = 0;
    for (const auto& p : pauli::enumerate(2)) {
        if (k == 0) {
            EXPECT_TRUE(p.is_identity());
        }
        EXPECT_EQ(p.index(), k++);
        two.insert(p.label());
    }
    EXPECT_EQ(two.size(), 16u);
    EXPECT_EQ(pauli::enumerate(3).size(), 64u);
    // Qubit j's pair sits at bits (2j, 2j+1).
    EXPECT_EQ(PauliString::from_label("IX").index(), 4u);
    EXPECT_EQ(PauliString::from_label("IZ").index(), 8u);
}

TEST(Pauli, LabelsPutQubitZeroLeftAndMostSignificant) {
    for (const std::string label : {"XIZY", "YZ", "IIX"}) {
        const auto p = PauliString::from_label(label);
        EXPECT_EQ(p.label(), label);
        EXPECT_LT((pauli::to_matrix(p) - dense_pauli(label)).norm(), 1e-12);
    }
    EXPECT_THROW(PauliString::from_label("XQ"), ParseError);
}

TEST(Pauli, HermitianAndInvolutory) {
    for (const auto& p : pauli::enumerate(2)) {
        const CMatrix m = pauli::to_matrix(p);
        EXPECT_LT((m - m.adjoint()).norm(), 1e-14);
        EXPECT_LT((m * m - CMatrix::Identity(4, 4)).norm(), 1e-14);
    }
}

}  // namespace
}  // namespace srent
