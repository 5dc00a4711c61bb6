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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srent/states.hpp"

namespace srent {

/// Largest qubit count a PauliString can describe (one 32-bit mask per component).
inline constexpr int kMaxPauliQubits = 16;

/// Hermitian n-qubit Pauli operator i^{|x & z|} X^x Z^z. Bit q of each mask
/// refers to qubit q. No phase is stored: the set of PauliStrings is the
/// quotient group with +1 phases.
struct PauliString {
    int n = 1;
    std::uint32_t x = 0;
    std::uint32_t z = 0;

    static PauliString identity(int n) { return {n, 0, 0}; }
    /// Single-qubit Pauli ('I', 'X', 'Y', 'Z') on qubit q of an n-qubit register.
    static PauliString single(int n, int q, char which);
    /// Parses labels like "XIZY"; the leftmost character is qubit 0.
    static PauliString from_label(std::string_view label);
    /// Inverse of index(): qubit q takes (x_q, z_q) from bits (2q, 2q+1) of k.
    static PauliString from_index(int n, std::uint64_t k);

    std::string label() const;
    std::uint64_t index() const;
    int weight() const;
    bool is_identity() const { return x == 0 && z == 0; }
    char at(int q) const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Phase i^k of a Pauli product, stored as k mod 4.
enum class Phase : std::uint8_t { kPlusOne = 0, kPlusI = 1, kMinusOne = 2, kMinusI = 3 };

Phase phase_from_exponent(int k);
inline int exponent(Phase p) { return static_cast<int>(p); }
Complex to_complex(Phase p);

/// P * Q == phase * pauli exactly, as operators.
struct PauliProduct {
    PauliString pauli;
    Phase phase = Phase::kPlusOne;
};

namespace pauli {

PauliProduct mul(const PauliString& p, const PauliString& q);

/// True iff the symplectic form <p.x, q.z> + <p.z, q.x> vanishes mod 2.
bool commutes(const PauliString& p, const PauliString& q);

/// <psi|P|psi> without building the matrix.
double expectation(const PauliString& p, const StateVector& psi);

/// tr(P rho).
double expectation_mixed(const PauliString& p, const DensityMatrix& rho);

/// <psi|P|psi> for all 4^n Paulis in canonical index order. One
/// Walsh-Hadamard transform per X mask: O(d^2 log d) total.
std::vector<double> expectation_spectrum(const StateVector& psi);

/// tr(P rho) for all 4^n Paulis in canonical index order.
std::vector<double> expectation_spectrum(const DensityMatrix& rho);

/// Dense d x d matrix of P, for oracles and small-n contractions.
CMatrix to_matrix(const PauliString& p);

/// 4^n, the number of n-qubit PauliStrings.
std::uint64_t count(int n);

/// Forward range over all PauliStrings of n qubits in canonical order
/// (identity first).
class Enumeration {
   public:
    class iterator {
       public:
        using value_type = PauliString;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int n, std::uint64_t k) : n_(n), k_(k) {}
        PauliString operator*() const { return PauliString::from_index(n_, k_); }
        iterator& operator++() {
            ++k_;
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++k_;
            return tmp;
        }
        friend bool operator==(const iterator&, const iterator&) = default;

       private:
        int n_ = 1;
        std::uint64_t k_ = 0;
    };

    explicit Enumeration(int n);
    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, count(n_)}; }
    std::uint64_t size() const { return count(n_); }

   private:
    int n_;
};

inline Enumeration enumerate(int n) { return Enumeration(n); }

}  // namespace pauli

}  // namespace srent
