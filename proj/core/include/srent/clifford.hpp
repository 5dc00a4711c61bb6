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
#include <set>
#include <string>
#include <vector>

#include "srent/circuit.hpp"
#include "srent/pauli.hpp"
#include "srent/rng.hpp"
#include "srent/states.hpp"

namespace srent {

/// A Pauli with a +1/-1 sign.
struct SignedPauli {
    PauliString pauli;
    int sign = 1;

    friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

/// Clifford unitary C (up to global phase) stored as the images
/// C X_q C^dagger and C Z_q C^dagger of the generators.
///
/// The binary part is the 2n x 2n symplectic matrix whose rows are the
/// generator images in the interleaved basis (x_0, z_0, x_1, z_1, ...).
class CliffordTableau {
   public:
    static CliffordTableau identity(int n);
    /// Throws DomainError if the images do not satisfy the symplectic
    /// commutation relations.
    static CliffordTableau from_images(std::vector<SignedPauli> x_images, std::vector<SignedPauli> z_images);
    /// Tableau of a single Clifford gate on an n-qubit register.
    static CliffordTableau from_gate(int n, const Gate& gate);
    /// Tableau of a Clifford circuit. Throws DomainError on non-Clifford gates.
    static CliffordTableau from_circuit(const Circuit& circuit);

    int num_qubits() const { return n_; }
    const SignedPauli& x_image(int q) const { return x_images_[static_cast<std::size_t>(q)]; }
    const SignedPauli& z_image(int q) const { return z_images_[static_cast<std::size_t>(q)]; }

    /// Rows of the symplectic matrix, row 2q = image of X_q, row 2q+1 = image of Z_q.
    std::vector<std::vector<std::uint8_t>> symplectic_matrix() const;
    /// Image sign bits in the same row order (1 = negative).
    std::vector<std::uint8_t> sign_bits() const;
    bool is_symplectic() const;

    /// Stable text key; equal keys mean equal Cliffords up to global phase.
    std::string key() const;

    friend bool operator==(const CliffordTableau&, const CliffordTableau&) = default;

   private:
    CliffordTableau(int n, std::vector<SignedPauli> x_images, std::vector<SignedPauli> z_images)
        : n_(n), x_images_(std::move(x_images)), z_images_(std::move(z_images)) {}

    int n_ = 1;
    std::vector<SignedPauli> x_images_;
    std::vector<SignedPauli> z_images_;
};

/// The stabilizer states of n qubits as dense vectors, one per state up to
/// global phase.
struct StabilizerStateSet {
    int n = 1;
    std::vector<StateVector> states;
    /// phase_canonical_key of every member.
    std::set<std::vector<std::int64_t>> keys;

    /// Membership up to global phase.
    bool contains(const StateVector& psi) const;
    std::size_t size() const { return states.size(); }
};

namespace clifford {

/// C P C^dagger = sign * Q.
SignedPauli conjugate_pauli(const CliffordTableau& c, const PauliString& p);
SignedPauli conjugate_pauli(const CliffordTableau& c, const SignedPauli& p);

/// Tableau of `after * before` (before acts first).
CliffordTableau compose(const CliffordTableau& after, const CliffordTableau& before);

/// Uniformly random Clifford: symplectic part from the transvection
/// construction, sign bits uniform.
CliffordTableau random_clifford(int n, Rng& rng);
CliffordTableau random_clifford(int n, std::uint64_t seed);

/// Gate sequence over {H, S, CNOT, X, Z} implementing the tableau,
/// signs included, up to global phase.
Circuit to_circuit(const CliffordTableau& c);

UnitaryMatrix to_unitary(const CliffordTableau& c);
StateVector apply(const CliffordTableau& c, const StateVector& psi);

/// 2^n * prod_{k=1..n} (2^k + 1).
std::uint64_t stabilizer_state_count(int n);

/// Largest n enumerate_stabilizer_states accepts without the override flag.
inline constexpr int kMaxStabilizerEnumeration = 3;

/// Orbit of |0...0> under {H, S, CNOT}, deduplicated up to global phase.
/// Throws CostGuardError for n > 3 unless allow_large (n = 4 is the hard cap).
StabilizerStateSet enumerate_stabilizer_states(int n, bool allow_large = false);

/// Cached enumeration for n <= 4; the returned reference stays valid.
const StabilizerStateSet& stabilizer_states(int n, bool allow_large = false);

/// Dedup key of a state: global phase fixed so the first nonzero amplitude is
/// real positive, amplitudes rounded to a 1e-9 grid.
std::vector<std::int64_t> phase_canonical_key(const StateVector& psi);

}  // namespace clifford

}  // namespace srent
