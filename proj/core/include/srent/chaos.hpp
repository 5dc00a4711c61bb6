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
#include <vector>

#include "srent/clifford.hpp"
#include "srent/estimator.hpp"
#include "srent/pauli.hpp"
#include "srent/power.hpp"
#include "srent/states.hpp"

namespace srent {

/// C_0 p(theta) C_1 p(theta) ... p(theta) C_k as an operator product, so C_k acts first.
/// Each p(theta) = diag(1, e^{i theta}) sits on a uniformly random qubit.
struct DopedCircuit {
    int n = 1;
    int k = 0;
    double theta = 0.0;
    std::vector<CliffordTableau> cliffords;
    std::vector<int> phase_qubits;

    static DopedCircuit sample(int n, int k, double theta, Rng& rng);
    UnitaryMatrix to_unitary() const;
};

struct HaarOtocReport {
    /// Pauli-pair average of the 8-point correlator over Haar unitaries.
    EstimatorResult otoc8;
    /// power_trace over the same unitaries.
    EstimatorResult m_lin;
    /// Mean of M_lin - (1 - (4 + d^2 (d+3)/4 <otoc8>) / (d+4)) across samples.
    double relation_gap = 0.0;
};

namespace chaos {

/// (7d^2 - 3d + d(d+3) cos 4 theta - 8) / (8 (d^2 - 1)).
double f_theta(double d, double theta);

/// 1 - (4 + (d-1) f(theta)^k) / (3 + d).
double doped_power_analytic(int n, int k, double theta);

/// A doped circuit applied to |0...0>.
StateVector doped_state(int n, int k, double theta, Rng& rng);

/// power_trace of `samples` independent doped circuits, in sample order.
std::vector<double> doped_power_samples(int n, int k, double theta, std::size_t samples, std::uint64_t seed);
EstimatorResult doped_power_experiment(int n, int k, double theta, std::size_t samples, std::uint64_t seed);

/// <psi| U^dag P1 U P2 |psi>.
Complex otoc2(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2, const StateVector& psi);
/// d^{-1} tr(U^dag P1 U P2).
Complex otoc2_traced(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2);

/// d^{-1} tr(A P3 P4 A P4 P5 A P5 P6 A P6 P3) with A = U^dag P1 U P2.
Complex otoc8_string(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2, const PauliString& p3,
                     const PauliString& p4, const PauliString& p5, const PauliString& p6);

/// Average of otoc8_string over all P3..P6 by direct enumeration (4^{4n} terms).
double otoc8_pauli_average_direct(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2,
                                  bool allow_large = false);
/// Same average through the twirl T(A) = d^{-2} sum_P P A P applied once per
/// P_i, giving d^{-1} tr(T(A)^4).
double otoc8_pauli_average_exact(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2);
/// Monte Carlo over uniformly drawn P3..P6; the analytic field holds otoc2_traced^4.
EstimatorResult otoc8_pauli_average_sampled(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2,
                                            std::size_t samples, std::uint64_t seed);

/// M_lin = 1 - 4/(4+d) - d^2(d+3)/(4(d+4)) <E_psi otoc2^4>, with E_psi <psi|B|psi>^4
/// contracted explicitly over the 24 tensor-factor permutations.
PowerResult power_from_otoc(const UnitaryMatrix& u, bool allow_large = false);

/// Same expression with E_psi replaced by an average over Haar random states.
EstimatorResult power_from_otoc_sampled(const UnitaryMatrix& u, std::size_t states, std::uint64_t seed);

/// 4(d^4 - 9d^2 + 6) / (d^6 (d^2 - 9)).
double haar_otoc8_analytic(double d);

HaarOtocReport haar_otoc8_experiment(int n, std::size_t samples, std::uint64_t seed);

}  // namespace chaos

}  // namespace srent
