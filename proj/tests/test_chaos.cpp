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

#include "oracles.hpp"
#include "srent/chaos.hpp"
#include "srent/clifford.hpp"
#include "srent/errors.hpp"
#include "srent/power.hpp"

namespace srent {
namespace {

constexpr double kPi = std::numbers::pi;

PauliString label(const char* s) { return PauliString::from_label(s); }

TEST(Chaos, FThetaExamples) {
    for (double d : {2.0, 4.0, 8.0}) {
        EXPECT_NEAR(chaos::f_theta(d, kPi / 2.0), 1.0, 1e-14);
        EXPECT_NEAR(chaos::f_theta(d, 0.0), 1.0, 1e-14);
        for (double theta = 0.0; theta < kPi; theta += 0.1) EXPECT_LE(chaos::f_theta(d, theta), 1.0 + 1e-14);
    }
    EXPECT_NEAR(chaos::f_theta(4.0, kPi / 4.0), 8.0 / 15.0, 1e-14);
}

TEST(Chaos, DopedAnalyticExamples) {
    EXPECT_NEAR(chaos::doped_power_analytic(2, 3, kPi / 4.0), 1.0 - (4.0 + 3.0 * std::pow(8.0 / 15.0, 3)) / 7.0, 1e-14);
    EXPECT_NEAR(chaos::doped_power_analytic(2, 3, kPi / 4.0), 0.363556, 1e-6);
    EXPECT_NEAR(chaos::doped_power_analytic(2, 0, kPi / 4.0), 0.0, 1e-14);
    EXPECT_NEAR(chaos::doped_power_analytic(2, 200, kPi / 4.0), power::haar_average(4.0), 1e-12);
}

TEST(Chaos, DopedCircuitStructure) {
    Rng rng(3);
    const auto c = DopedCircuit::sample(2, 3, kPi / 4.0, rng);
    EXPECT_EQ(c.cliffords.size(), 4u);
    EXPECT_EQ(c.phase_qubits.size(), 3u);
    const auto u = c.to_unitary().entries();
    EXPECT_LT((u * u.adjoint() - CMatrix::Identity(4, 4)).norm(), 1e-12);

    // theta = pi/2 doping stays Clifford.
    const auto s = DopedCircuit::sample(2, 3, kPi / 2.0, rng);
    EXPECT_NEAR(power::power_trace(s.to_unitary()).m_lin, 0.0, 1e-9);
}

TEST(Chaos, DopedSampleMeanBracketsAnalytic) {
    // One T gate between Cliffords has the power of T itself, so k = 1 is deterministic.
    const auto one = chaos::doped_power_experiment(2, 1, kPi / 4.0, 20, 12);
    EXPECT_NEAR(one.estimate, 1.0 - (4.0 + 3.0 * 8.0 / 15.0) / 7.0, 1e-9);
    const auto r = chaos::doped_power_experiment(2, 3, kPi / 4.0, 300, 12);
    ASSERT_TRUE(r.analytic.has_value());
    EXPECT_LT(r.z_score(), 4.0);
    const auto zero = chaos::doped_power_experiment(2, 0, kPi / 4.0, 20, 12);
    EXPECT_NEAR(zero.estimate, 0.0, 1e-9);
}

TEST(Chaos, Otoc2Examples) {
    const auto id = UnitaryMatrix::identity(2);
    const auto psi = states::haar_state(2, 1);
    EXPECT_LT(std::abs(chaos::otoc2(id, label("XZ"), label("XZ"), psi) - Complex(1.0)), 1e-12);
    EXPECT_LT(std::abs(chaos::otoc2_traced(id, label("XZ"), label("XZ")) - Complex(1.0)), 1e-12);
    EXPECT_LT(std::abs(chaos::otoc2_traced(id, label("XZ"), label("YI"))), 1e-12);

    const auto u = states::haar_unitary(2, 8);
    const CMatrix dense = u.entries().adjoint() * testing::dense_pauli("XY") * u.entries() * testing::dense_pauli("ZI");
    EXPECT_LT(std::abs(chaos::otoc2_traced(u, label("XY"), label("ZI")) - dense.trace() / 4.0), 1e-12);
}

TEST(Chaos, Otoc2HaarStateAverageIsTraced) {
    const auto u = states::haar_unitary(2, 9);
    const Complex target = chaos::otoc2_traced(u, label("XY"), label("ZX"));
    constexpr int kSamples = 20000;
    Rng rng(4);
    Complex sum = 0.0;
    double sq_re = 0.0, sq_im = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        const Complex v = chaos::otoc2(u, label("XY"), label("ZX"), states::haar_state(2, rng));
        sum += v;
        sq_re += v.real() * v.real();
        sq_im += v.imag() * v.imag();
    }
    const Complex mean = sum / static_cast<double>(kSamples);
    const double se_re = std::sqrt((sq_re / kSamples - mean.real() * mean.real()) / kSamples);
    const double se_im = std::sqrt((sq_im / kSamples - mean.imag() * mean.imag()) / kSamples);
    EXPECT_LT(std::abs(mean.real() - target.real()), 3.0 * se_re + 1e-12);
    EXPECT_LT(std::abs(mean.imag() - target.imag()), 3.0 * se_im + 1e-12);
}

TEST(Chaos, Otoc8FourthPowerIdentity) {
    EXPECT_NEAR(chaos::otoc8_pauli_average_direct(UnitaryMatrix::identity(1), label("I"), label("I")), 1.0, 1e-12);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto u = states::haar_unitary(1, seed);
        for (const auto& p1 : pauli::enumerate(1)) {
            for (const auto& p2 : pauli::enumerate(1)) {
                const double target = std::pow(chaos::otoc2_traced(u, p1, p2), 4).real();
                EXPECT_NEAR(chaos::otoc8_pauli_average_direct(u, p1, p2), target, 1e-10);
                EXPECT_NEAR(chaos::otoc8_pauli_average_exact(u, p1, p2), target, 1e-10);
            }
        }
    }
    const auto u2 = states::haar_unitary(2, 5);
    const double target = std::pow(chaos::otoc2_traced(u2, label("XI"), label("ZY")), 4).real();
    EXPECT_NEAR(chaos::otoc8_pauli_average_exact(u2, label("XI"), label("ZY")), target, 1e-10);
    const auto sampled = chaos::otoc8_pauli_average_sampled(u2, label("XI"), label("ZY"), 4000, 2);
    EXPECT_LE(std::abs(sampled.estimate - target), std::max(4.0 * sampled.std_error, 1e-10));
    EXPECT_THROW(chaos::otoc8_pauli_average_direct(u2, label("XI"), label("ZY")), CostGuardError);
}

TEST(Chaos, PowerFromOtocMatchesTrace) {
    EXPECT_NEAR(chaos::power_from_otoc(clifford::to_unitary(clifford::random_clifford(2, 1))).m_lin, 0.0, 1e-9);
    const auto t = circuits::to_unitary(Circuit::parse("T 0\n", 1));
    EXPECT_NEAR(chaos::power_from_otoc(t).m_lin, power::power_enumerate(t).m_lin, 1e-9);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto u = states::haar_unitary(2, seed);
        EXPECT_NEAR(chaos::power_from_otoc(u).m_lin, power::power_trace(u).m_lin, 1e-9);
    }
    const auto u = states::haar_unitary(1, 77);
    const auto sampled = chaos::power_from_otoc_sampled(u, 20000, 3);
    EXPECT_LE(std::abs(sampled.estimate - power::power_trace(u).m_lin), 4.0 * sampled.std_error);
}

TEST(Chaos, HaarOtoc8Analytic) {
    EXPECT_NEAR(chaos::haar_otoc8_analytic(4.0), 472.0 / 28672.0, 1e-15);
    EXPECT_NEAR(chaos::haar_otoc8_analytic(8.0), 4.0 * (4096.0 - 576.0 + 6.0) / (262144.0 * 55.0), 1e-15);
    EXPECT_NEAR(chaos::haar_otoc8_analytic(8.0), 9.79e-4, 1e-6);
    EXPECT_THROW(chaos::haar_otoc8_analytic(3.0), DomainError);
    const auto report = chaos::haar_otoc8_experiment(2, 100, 6);
    EXPECT_LT(report.otoc8.z_score(), 4.0);
    EXPECT_LT(report.m_lin.z_score(), 4.0);
}

}  // namespace
}  // namespace srent
