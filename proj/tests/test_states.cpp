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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "srent/errors.hpp"
#include "srent/estimator.hpp"
#include "srent/states.hpp"

namespace srent {
namespace {

constexpr double kPi = std::numbers::pi;

/// Dense operator acting as `g` on qubit q of n (qubit 0 most significant).
CMatrix on_qubit(const CMatrix& g, int q, int n) {
    CMatrix m = CMatrix::Identity(1, 1);
    for (int j = 0; j < n; ++j) m = testing::dense_kron(m, j == q ? g : CMatrix(CMatrix::Identity(2, 2)));
    return m;
}

CMatrix dense_cnot(int control, int target, int n) {
    CMatrix p0 = CMatrix::Zero(2, 2), p1 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    CMatrix a = CMatrix::Identity(1, 1), b = CMatrix::Identity(1, 1);
    for (int j = 0; j < n; ++j) {
        const CMatrix id = CMatrix::Identity(2, 2);
        a = testing::dense_kron(a, j == control ? p0 : id);
        b = testing::dense_kron(b, j == control ? p1 : (j == target ? testing::single_pauli('X') : id));
    }
    return a + b;
}

/// Reduced density matrix by explicit index summation.
CMatrix dense_partial_trace(const CMatrix& rho, int n, const std::vector<int>& keep) {
    const std::size_t d = std::size_t{1} << n;
    const std::size_t dk = std::size_t{1} << keep.size();
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    auto bit = [n](std::size_t index, int q) { return (index >> (n - 1 - q)) & 1u; };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            bool traced_equal = true;
            for (int q = 0; q < n; ++q) {
                if (std::find(keep.begin(), keep.end(), q) == keep.end() && bit(i, q) != bit(j, q)) traced_equal = false;
            }
            if (!traced_equal) continue;
            std::size_t a = 0, b = 0;
            for (int q : keep) {
                a = (a << 1) | bit(i, q);
                b = (b << 1) | bit(j, q);
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
                rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return out;
}

TEST(States, GateExamples) {
    const int q0[] = {0};
    const auto plus = states::apply_gate(StateVector::zero(1), gates::h(), q0);
    EXPECT_NEAR(std::abs(plus[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(plus[1] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);

    const auto h = states::apply_gate(plus, gates::phase(kPi / 4.0), q0);
    EXPECT_LT((h.amplitudes() - StateVector::magic_h(1).amplitudes()).norm(), 1e-15);
    EXPECT_NEAR(std::arg(h[1]), kPi / 4.0, 1e-15);

    const int both[] = {0, 1};
    const auto out = states::apply_gate(StateVector::basis(2, 0b10), gates::cnot(), both);
    EXPECT_NEAR(std::abs(out[0b11]), 1.0, 1e-15);
}

TEST(States, GateApplicationMatchesDenseOracle) {
    Rng rng(21);
    for (int n = 1; n <= 3; ++n) {
        const StateVector psi(n, testing::random_vector(std::size_t{1} << n, rng));
        for (int q = 0; q < n; ++q) {
            const int t[] = {q};
            for (const CMatrix& g : {gates::h(), gates::s(), gates::t(), gates::y(), gates::phase(0.3)}) {
                const auto out = states::apply_gate(psi, g, t);
                EXPECT_LT((out.amplitudes() - on_qubit(g, q, n) * psi.amplitudes()).norm(), 1e-12);
                EXPECT_NEAR(out.amplitudes().norm(), 1.0, 1e-12);
            }
            for (int r = 0; r < n; ++r) {
                if (r == q) continue;
                const int ct[] = {q, r};
                const auto out = states::apply_gate(psi, gates::cnot(), ct);
                EXPECT_LT((out.amplitudes() - dense_cnot(q, r, n) * psi.amplitudes()).norm(), 1e-12);
                EXPECT_LT((states::embed_gate(gates::cnot(), ct, n) - dense_cnot(q, r, n)).norm(), 1e-12);
            }
        }
    }
}

TEST(States, BadTargetsThrow) {
    const int dup[] = {0, 0};
    const int out_of_range[] = {2};
    EXPECT_THROW(states::apply_gate(StateVector::zero(2), gates::cnot(), dup), DimensionError);
    EXPECT_THROW(states::apply_gate(StateVector::zero(2), gates::h(), out_of_range), DimensionError);
    const int one[] = {0};
    EXPECT_THROW(states::apply_gate(StateVector::zero(2), gates::cnot(), one), DimensionError);
}

TEST(States, ValidationRejectsBadInputs) {
    CVector v(2);
    v << 1.0, 1.0;
    EXPECT_THROW(StateVector(1, v), DomainError);
    EXPECT_THROW(StateVector(2, v / std::sqrt(2.0)), DimensionError);
    CMatrix m = CMatrix::Identity(2, 2);
    EXPECT_THROW(DensityMatrix(1, m), DomainError);
    m(0, 1) = 0.3;
    m /= 2.0;
    EXPECT_THROW(DensityMatrix(1, m), DomainError);
    EXPECT_THROW(UnitaryMatrix(1, CMatrix::Identity(2, 2) * 2.0), DomainError);
    CMatrix neg = CMatrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix(1, neg).validate_positive(), DomainError);
}

TEST(States, HaarStateIsDeterministicAndNormalized) {
    const auto a = states::haar_state(4, 99);
    const auto b = states::haar_state(4, 99);
    EXPECT_EQ(a.amplitudes(), b.amplitudes());
    EXPECT_NEAR(a.amplitudes().norm(), 1.0, 1e-12);
    EXPECT_NE(a.amplitudes(), states::haar_state(4, 100).amplitudes());
}

TEST(States, HaarStateMomentsAndReducedPurity) {
    // E|psi_0|^2 = 1/d, E|psi_0|^4 = 2/(d(d+1)), E tr(rho_A^2) = (dA + dB)/(dA dB + 1).
    const int n = 3;
    const double d = 8.0;
    std::vector<double> p0, p0sq, purity;
    const int keep[] = {0};
    for (std::uint64_t i = 0; i < 4000; ++i) {
        Rng rng = Rng::stream(17, i);
        const auto psi = states::haar_state(n, rng);
        const double p = std::norm(psi[0]);
        p0.push_back(p);
        p0sq.push_back(p * p);
        purity.push_back(states::purity(states::partial_trace(DensityMatrix::pure(psi), keep)));
    }
    const auto s1 = summarize(p0), s2 = summarize(p0sq), s3 = summarize(purity);
    EXPECT_LT(std::abs(s1.mean - 1.0 / d), 3.0 * s1.std_error);
    EXPECT_LT(std::abs(s2.mean - 2.0 / (d * (d + 1.0))), 3.0 * s2.std_error);
    EXPECT_LT(std::abs(s3.mean - 6.0 / 9.0), 3.0 * s3.std_error);
}

TEST(States, HaarUnitaryIsUnitaryDeterministicWithHaarMoments) {
    const auto u = states::haar_unitary(3, 5);
    EXPECT_LT((u.entries().adjoint() * u.entries() - CMatrix::Identity(8, 8)).norm(), 1e-10);
    EXPECT_EQ(u.entries(), states::haar_unitary(3, 5).entries());

    std::vector<double> tr2, u00;
    for (std::uint64_t i = 0; i < 4000; ++i) {
        Rng rng = Rng::stream(23, i);
        const auto v = states::haar_unitary(2, rng);
        tr2.push_back(std::norm(v.entries().trace()));
        u00.push_back(std::norm(v.entries()(0, 0)));
    }
    const auto s = summarize(tr2), t = summarize(u00);
    EXPECT_LT(std::abs(s.mean - 1.0), 3.0 * s.std_error);
    EXPECT_LT(std::abs(t.mean - 0.25), 3.0 * t.std_error);
}

TEST(States, PurityExamples) {
    EXPECT_NEAR(states::purity(DensityMatrix::pure(states::haar_state(3, 1))), 1.0, 1e-12);
    EXPECT_NEAR(states::purity(DensityMatrix::maximally_mixed(2)), 0.25, 1e-15);
}

TEST(States, PartialTraceExamples) {
    const int keep0[] = {0};
    const auto reduced = states::partial_trace(DensityMatrix::pure(StateVector::zero(2)), keep0);
    CMatrix expected = CMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    EXPECT_LT((reduced.entries() - expected).norm(), 1e-15);

    const int dup[] = {0, 0};
    const int bad[] = {3};
    const auto rho = DensityMatrix::maximally_mixed(2);
    EXPECT_THROW(states::partial_trace(rho, dup), DimensionError);
    EXPECT_THROW(states::partial_trace(rho, bad), DimensionError);
    EXPECT_THROW(states::partial_trace(rho, std::span<const int>{}), DimensionError);
}

TEST(States, PartialTraceMatchesIndexSummation) {
    Rng rng(4);
    const int n = 3;
    const CVector a = testing::random_vector(8, rng), b = testing::random_vector(8, rng);
    const CMatrix m = 0.6 * a * a.adjoint() + 0.4 * b * b.adjoint();
    const DensityMatrix rho(n, m);
    for (const std::vector<int>& keep : {std::vector<int>{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1}, {2, 0}}) {
        auto sorted = keep;
        std::sort(sorted.begin(), sorted.end());
        const auto r = states::partial_trace(rho, keep);
        EXPECT_LT((r.entries() - dense_partial_trace(m, n, sorted)).norm(), 1e-12);
        EXPECT_NEAR(r.entries().trace().real(), 1.0, 1e-12);
        EXPECT_LT((r.entries() - r.entries().adjoint()).norm(), 1e-14);
    }
}

TEST(States, PartialTraceUndoesTensor) {
    Rng rng(6);
    const CVector a = testing::random_vector(4, rng), b = testing::random_vector(4, rng), c = testing::random_vector(2, rng);
    const DensityMatrix rho(2, 0.5 * a * a.adjoint() + 0.5 * b * b.adjoint());
    const DensityMatrix sigma(1, c * c.adjoint());
    const int keep[] = {0, 1};
    EXPECT_LT((states::partial_trace(states::tensor(rho, sigma), keep).entries() - rho.entries()).norm(), 1e-12);
}

TEST(States, TensorOrderPutsFirstFactorOnQubitZero) {
    const auto one = StateVector::basis(1, 1);
    const auto zero = StateVector::zero(1);
    const auto joint = states::tensor(one, zero);
    EXPECT_NEAR(std::abs(joint[0b10]), 1.0, 1e-15);
    const auto u = states::tensor(UnitaryMatrix(1, gates::x()), UnitaryMatrix::identity(1));
    EXPECT_LT((u.entries() - on_qubit(gates::x(), 0, 2)).norm(), 1e-15);
}

TEST(States, PhaseGateIsExactAtQuarterTurns) {
    const CMatrix s = gates::phase(kPi / 2.0);
    EXPECT_EQ(s, gates::s());
    EXPECT_EQ(gates::phase(0.0), gates::identity());
    EXPECT_LT((gates::phase(kPi / 4.0) - testing::dense_phase(kPi / 4.0)).norm(), 1e-15);
}

}  // namespace
}  // namespace srent
