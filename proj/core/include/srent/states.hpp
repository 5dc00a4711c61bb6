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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srent/rng.hpp"

namespace srent {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Tolerance on the defining invariants of StateVector, DensityMatrix and UnitaryMatrix.
inline constexpr double kInvariantTolerance = 1e-10;

/// Largest qubit count accepted by the dense containers.
inline constexpr int kMaxQubits = 16;

/// Dense pure state on n qubits. Qubit 0 is the most significant bit of the
/// amplitude index.
class StateVector {
   public:
    /// Throws DimensionError if the length is not 2^n, DomainError if the
    /// norm differs from one by more than kInvariantTolerance.
    StateVector(int n, CVector amplitudes);

    /// Rescales to unit norm instead of rejecting. Zero vectors are rejected.
    static StateVector normalized(int n, CVector amplitudes);
    static StateVector basis(int n, std::uint64_t index);
    static StateVector zero(int n) { return basis(n, 0); }
    /// |H>^{(x)n} with |H> = (|0> + e^{i pi/4}|1>)/sqrt(2).
    static StateVector magic_h(int n);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const CVector& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

   private:
    int n_;
    CVector amplitudes_;
};

/// Dense mixed state: Hermitian with unit trace (checked), PSD checked on demand.
class DensityMatrix {
   public:
    DensityMatrix(int n, CMatrix entries);

    static DensityMatrix pure(const StateVector& psi);
    static DensityMatrix maximally_mixed(int n);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const CMatrix& entries() const { return entries_; }

    double min_eigenvalue() const;
    /// Throws DomainError when an eigenvalue is below -tolerance.
    void validate_positive(double tolerance = 1e-8) const;

   private:
    int n_;
    CMatrix entries_;
};

/// Dense unitary on n qubits. U^dagger U = I is checked on construction.
class UnitaryMatrix {
   public:
    UnitaryMatrix(int n, CMatrix entries);

    static UnitaryMatrix identity(int n);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const CMatrix& entries() const { return entries_; }
    UnitaryMatrix adjoint() const;

    /// (*this) * other, i.e. other acts first.
    UnitaryMatrix operator*(const UnitaryMatrix& other) const;
    StateVector operator*(const StateVector& psi) const;

   private:
    int n_;
    CMatrix entries_;
};

/// Single- and two-qubit gate matrices. Two-qubit matrices use the first
/// target as the more significant bit.
namespace gates {
CMatrix identity();
CMatrix h();
CMatrix s();
CMatrix t();
CMatrix x();
CMatrix y();
CMatrix z();
/// diag(1, e^{i theta}).
CMatrix phase(double theta);
CMatrix cnot();
}  // namespace gates

namespace states {

/// Applies a 2^k x 2^k gate to the listed qubits. targets[0] is the most
/// significant bit of the gate's index.
StateVector apply_gate(const StateVector& psi, const CMatrix& gate, std::span<const int> targets);

/// In-place kernel behind apply_gate; performs no norm check.
void apply_gate_inplace(CVector& amplitudes, int n, const CMatrix& gate, std::span<const int> targets);

/// The d x d matrix of a gate acting on `targets` of an n-qubit register.
CMatrix embed_gate(const CMatrix& gate, std::span<const int> targets, int n);

/// Haar-random pure state (normalized complex Gaussian vector).
StateVector haar_state(int n, Rng& rng);
StateVector haar_state(int n, std::uint64_t seed);

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal divided out.
UnitaryMatrix haar_unitary(int n, Rng& rng);
UnitaryMatrix haar_unitary(int n, std::uint64_t seed);

double purity(const DensityMatrix& rho);

/// a (x) b with a's qubits first.
/// Kronecker product; `a` occupies the more significant index bits.
CMatrix kron(const CMatrix& a, const CMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Reduced state on `keep` (distinct, in range). Kept qubits stay in
/// ascending order regardless of the order given.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

}  // namespace states

}  // namespace srent
