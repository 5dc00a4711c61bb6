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
#include <optional>
#include <string>

#include "srent/estimator.hpp"
#include "srent/states.hpp"

namespace srent {

struct PowerResult {
    double m_lin = 0.0;
    /// -log2(1 - m_lin), a lower bound on the average M_2 power.
    double m2_lower = 0.0;
    std::string method;
    /// Average of M_2 over stabilizer states; only the enumeration method fills it.
    std::optional<double> m2_exact;
    /// ||Delta Q Pi_sym||_2^2 for the commutator method.
    std::optional<double> commutator_norm2;
};

struct TCountBound {
    double raw = 0.0;
    double clamped = 0.0;
};

namespace power {

/// Largest n accepted without `allow_large` by the four-copy methods.
inline constexpr int kMaxTraceQubits = 3;
inline constexpr int kMaxCommutatorQubits = 2;

/// (d+1)(d+2)/6.
double d_plus(double d);

/// tr(B^{(x)4} Pi_sym) from the S_4 cycle-type expansion in traces of B^k.
Complex symmetric_fourth_trace(const CMatrix& b);

/// Literal average of M_lin(U|s>) over all stabilizer states |s>.
PowerResult power_enumerate(const UnitaryMatrix& u, bool allow_large = false);

/// Closed form over Pauli pairs with B = U^dag P1 U P2.
PowerResult power_trace(const UnitaryMatrix& u, bool allow_large = false);

/// ||U^dag(x)4 Q Pi_sym U^(x)4 - Q Pi_sym||_2^2 with explicit d^4 x d^4 matrices.
double zero_power_diagnostic(const UnitaryMatrix& u, bool allow_large = false);

/// M_lin from the commutator norm: d / (2 (4+d) D_+) * ||Delta||^2.
PowerResult power_from_commutator(const UnitaryMatrix& u, bool allow_large = false);

/// 2n - log2 s(U), s(U) counting pairs with |tr(P1 U^dag P2 U)| / d = 1.
double unitary_stabilizer_nullity(const UnitaryMatrix& u, bool allow_large = false);

/// -log2(d - (4+d) M_lin) + log2(d+3) - 2; +infinity once M_lin >= d/(4+d).
TCountBound tcount_lower_bound(double m_lin, double d);
TCountBound tcount_lower_bound(const PowerResult& result, double d);

/// 1 - 4/(d+3).
double haar_average(double d);

/// Mean of power_trace over Haar unitaries; `spread` holds the sample standard deviation.
EstimatorResult haar_power_experiment(int n, std::size_t samples, std::uint64_t seed);

}  // namespace power

}  // namespace srent
