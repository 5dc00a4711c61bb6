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
#include <span>
#include <string>
#include <vector>

#include "srent/estimator.hpp"
#include "srent/pauli.hpp"
#include "srent/rng.hpp"
#include "srent/states.hpp"

namespace srent {

/// A Pauli counts as a stabilizer of psi when |<P>| > 1 - kNullityTolerance.
inline constexpr double kNullityTolerance = 1e-9;
/// Xi entries with <P>^2 <= kSupportTolerance are treated as zero when counting support.
inline constexpr double kSupportTolerance = 1e-12;

/// Xi_P = tr(P rho)^2 / d over all 4^n Paulis in canonical order. Sums to the
/// purity of the input (1 for pure states).
class XiDistribution {
   public:
    XiDistribution(int n, std::vector<double> values);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return std::size_t{1} << n_; }
    const std::vector<double>& values() const { return values_; }
    double at(const PauliString& p) const { return values_[p.index()]; }
    double total() const;
    /// Number of entries with d * Xi_P above kSupportTolerance.
    std::size_t support() const;

   private:
    int n_;
    std::vector<double> values_;
};

struct BoundCheck {
    enum class Kind { kLessEqual, kLess, kEqual };

    std::string name;
    Kind kind = Kind::kLessEqual;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;

    /// rhs - lhs for inequalities, |lhs - rhs| for equalities.
    double margin() const;
};

struct MagicReport {
    int n = 1;
    std::vector<double> alphas;
    std::vector<double> m_alpha;
    double m_lin = 0.0;
    double m0 = 0.0;
    double nullity = 0.0;
    double stab_norm = 1.0;
    std::vector<BoundCheck> bounds;

    bool all_bounds_hold() const;
};

namespace magic {

XiDistribution xi_distribution(const StateVector& psi);
XiDistribution xi_distribution(const DensityMatrix& rho);

/// Stabilizer Renyi entropy in bits: (1-alpha)^{-1} log2 sum Xi^alpha - log2 d,
/// Shannon limit at alpha = 1, log2(support / d) at alpha = 0.
double renyi_entropy(const XiDistribution& xi, double alpha);
double renyi_entropy(const StateVector& psi, double alpha);

/// 1 - d ||Xi||_2^2.
double linear_entropy(const XiDistribution& xi);

/// Mixed-state entropy -log2( sum tr^4(P rho) / sum tr^2(P rho) ), which equals
/// M_2(rho) - S_2(rho).
double mixed_magic(const DensityMatrix& rho);

/// n - log2 |St(psi)|.
double stabilizer_nullity(const StateVector& psi);
/// |St(psi)|: Paulis with <P> = +-1 (tolerance kNullityTolerance).
std::uint64_t stabilizer_group_size(const StateVector& psi);

/// d^{-1} sum_P |<P>|.
double stabilizer_norm(const StateVector& psi);

/// 1 - log2(3/2): M_2 of one |H> copy.
double magic_state_m2();

/// M_alpha(|H>^{(x)n}) in closed form; the alpha = 1 entry is the limit n/2.
double magic_state_closed_form(int n, double alpha);

/// Smallest integer r with r * (1 - log2(3/2)) >= m2, tolerant to round-off of 1e-9 copies.
int synthesis_copy_bound(double m2);

/// Entropies, nullity, stabilizer norm, and the bound chain
/// M_alpha <= M_0 <= nu, M_2 < log2(d+1) - 1, M_lin < 1 - 2/(d+1),
/// M_{1/2} = 2 log2 D, and monotonicity in alpha.
MagicReport bound_report(const StateVector& psi, std::span<const double> alphas);
MagicReport bound_report(const StateVector& psi);

/// Free mixed state d^{-1} sum_{g in G} phi_g g, where G is the group generated
/// by `generators` independent commuting Paulis (a random stabilizer subgroup
/// with random signs). Validated positive semidefinite.
DensityMatrix random_free_state(int n, int generators, Rng& rng);

struct PartialTraceScan {
    std::size_t samples = 0;
    std::size_t violations = 0;
    /// Largest observed M~_2(reduced) - M~_2(full); negative when no increase occurred.
    double max_increase = 0.0;
    double mean_full = 0.0;
    double mean_reduced = 0.0;
    std::uint64_t seed = 0;
};

/// Samples states on n qubits (Haar pure states and mixtures of two Haar
/// states), traces out the last qubit, and counts cases where M~_2 increased
/// by more than 1e-9.
PartialTraceScan partial_trace_scan(int n, std::size_t samples, std::uint64_t seed);

}  // namespace magic

}  // namespace srent
