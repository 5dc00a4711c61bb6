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

#include "srent/pauli.hpp"

#include <bit>
#include <cmath>

#include "srent/errors.hpp"
#include "srent/parallel.hpp"
#include "srent/walsh.hpp"

namespace srent {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxPauliQubits) throw DimensionError("Pauli qubit count out of range");
}

void check_same(const PauliString& p, const PauliString& q) {
    if (p.n != q.n) throw DimensionError("Pauli strings act on different qubit counts");
}

/// Qubit-indexed mask -> amplitude-index mask (qubit q is bit n-1-q).
std::uint32_t to_amplitude_mask(std::uint32_t m, int n) {
    std::uint32_t out = 0;
    for (int q = 0; q < n; ++q) {
        if ((m >> q) & 1u) out |= 1u << (n - 1 - q);
    }
    return out;
}

/// Moves bit q of m to bit 2q.
std::uint64_t spread_bits(std::uint32_t m) {
    std::uint64_t out = 0;
    for (int q = 0; m != 0; ++q, m >>= 1) {
        if (m & 1u) out |= std::uint64_t{1} << (2 * q);
    }
    return out;
}

int popcount(std::uint64_t v) { return std::popcount(v); }

}  // namespace

PauliString PauliString::single(int n, int q, char which) {
    check_n(n);
    if (q < 0 || q >= n) throw DimensionError("Pauli qubit index out of range");
    const std::uint32_t bit = 1u << q;
    switch (which) {
        case 'I':
            return {n, 0, 0};
        case 'X':
            return {n, bit, 0};
        case 'Y':
            return {n, bit, bit};
        case 'Z':
            return {n, 0, bit};
        default:
            throw ParseError(std::string("unknown Pauli '") + which + "'");
    }
}

PauliString PauliString::from_label(std::string_view label) {
    const int n = static_cast<int>(label.size());
    check_n(n);
    PauliString p{n, 0, 0};
    for (int q = 0; q < n; ++q) {
        const auto s = single(n, q, label[static_cast<std::size_t>(q)]);
        p.x |= s.x;
        p.z |= s.z;
    }
    return p;
}

PauliString PauliString::from_index(int n, std::uint64_t k) {
    check_n(n);
    PauliString p{n, 0, 0};
    for (int q = 0; q < n; ++q) {
        p.x |= static_cast<std::uint32_t>((k >> (2 * q)) & 1u) << q;
        p.z |= static_cast<std::uint32_t>((k >> (2 * q + 1)) & 1u) << q;
    }
    return p;
}

std::string PauliString::label() const {
    std::string s(static_cast<std::size_t>(n), 'I');
    for (int q = 0; q < n; ++q) s[static_cast<std::size_t>(q)] = at(q);
    return s;
}

std::uint64_t PauliString::index() const { return spread_bits(x) | (spread_bits(z) << 1); }

int PauliString::weight() const { return std::popcount(x | z); }

char PauliString::at(int q) const {
    const bool xb = (x >> q) & 1u;
    const bool zb = (z >> q) & 1u;
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

Phase phase_from_exponent(int k) { return static_cast<Phase>(((k % 4) + 4) % 4); }

Complex to_complex(Phase p) {
    switch (p) {
        case Phase::kPlusOne:
            return {1, 0};
        case Phase::kPlusI:
            return {0, 1};
        case Phase::kMinusOne:
            return {-1, 0};
        case Phase::kMinusI:
            return {0, -1};
    }
    return {1, 0};
}

namespace pauli {

PauliProduct mul(const PauliString& p, const PauliString& q) {
    check_same(p, q);
    // Per-qubit exponent of i in (sigma_1 sigma_2), summed mod 4.
    int k = 0;
    for (int j = 0; j < p.n; ++j) {
        const int x1 = (p.x >> j) & 1u, z1 = (p.z >> j) & 1u;
        const int x2 = (q.x >> j) & 1u, z2 = (q.z >> j) & 1u;
        if (x1 && z1) {
            k += z2 - x2;
        } else if (x1) {
            k += z2 * (2 * x2 - 1);
        } else if (z1) {
            k += x2 * (1 - 2 * z2);
        }
    }
    return {PauliString{p.n, p.x ^ q.x, p.z ^ q.z}, phase_from_exponent(k)};
}

bool commutes(const PauliString& p, const PauliString& q) {
    check_same(p, q);
    return ((std::popcount(p.x & q.z) + std::popcount(p.z & q.x)) & 1) == 0;
}

double expectation(const PauliString& p, const StateVector& psi) {
    if (p.n != psi.num_qubits()) throw DimensionError("Pauli and state qubit counts differ");
    const std::uint32_t ax = to_amplitude_mask(p.x, p.n);
    const std::uint32_t az = to_amplitude_mask(p.z, p.n);
    const auto& a = psi.amplitudes();
    Complex acc = 0.0;
    const std::size_t d = psi.dim();
    for (std::size_t b = 0; b < d; ++b) {
        const Complex term = std::conj(a[static_cast<Eigen::Index>(b ^ ax)]) * a[static_cast<Eigen::Index>(b)];
        acc += (popcount(b & az) & 1) ? -term : term;
    }
    return (to_complex(phase_from_exponent(std::popcount(p.x & p.z))) * acc).real();
}

double expectation_mixed(const PauliString& p, const DensityMatrix& rho) {
    if (p.n != rho.num_qubits()) throw DimensionError("Pauli and density matrix qubit counts differ");
    const std::uint32_t ax = to_amplitude_mask(p.x, p.n);
    const std::uint32_t az = to_amplitude_mask(p.z, p.n);
    const auto& m = rho.entries();
    Complex acc = 0.0;
    const std::size_t d = rho.dim();
    for (std::size_t b = 0; b < d; ++b) {
        const Complex term = m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ ax));
        acc += (popcount(b & az) & 1) ? -term : term;
    }
    return (to_complex(phase_from_exponent(std::popcount(p.x & p.z))) * acc).real();
}

namespace {

/// Shared driver: `pair_term(ax, b)` returns the quantity whose Walsh
/// transform over b yields the (unphased) expectation for X mask ax.
template <class PairTerm>
std::vector<double> spectrum_impl(int n, PairTerm&& pair_term) {
    const std::size_t d = std::size_t{1} << n;
    std::vector<std::uint64_t> spread(d);
    for (std::size_t m = 0; m < d; ++m) {
        spread[m] = spread_bits(to_amplitude_mask(static_cast<std::uint32_t>(m), n));
    }
    std::vector<double> out(d * d);
    detail::run_blocks(d, thread_count(), [&](std::size_t begin, std::size_t end) {
        std::vector<Complex> w(d);
        for (std::size_t ax = begin; ax < end; ++ax) {
            for (std::size_t b = 0; b < d; ++b) w[b] = pair_term(ax, b);
            walsh_hadamard(std::span<Complex>(w));
            for (std::size_t az = 0; az < d; ++az) {
                const Complex phase = to_complex(phase_from_exponent(popcount(ax & az)));
                // to_amplitude_mask is an involution, so spread[] maps amplitude masks back to qubit masks.
                out[spread[ax] | (spread[az] << 1)] = (phase * w[az]).real();
            }
        }
    });
    return out;
}

}  // namespace

std::vector<double> expectation_spectrum(const StateVector& psi) {
    const auto& a = psi.amplitudes();
    return spectrum_impl(psi.num_qubits(), [&](std::size_t ax, std::size_t b) {
        return std::conj(a[static_cast<Eigen::Index>(b ^ ax)]) * a[static_cast<Eigen::Index>(b)];
    });
}

std::vector<double> expectation_spectrum(const DensityMatrix& rho) {
    const auto& m = rho.entries();
    return spectrum_impl(rho.num_qubits(), [&](std::size_t ax, std::size_t b) {
        return m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ ax));
    });
}

CMatrix to_matrix(const PauliString& p) {
    check_n(p.n);
    const std::size_t d = std::size_t{1} << p.n;
    const std::uint32_t ax = to_amplitude_mask(p.x, p.n);
    const std::uint32_t az = to_amplitude_mask(p.z, p.n);
    const Complex phase = to_complex(phase_from_exponent(std::popcount(p.x & p.z)));
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t b = 0; b < d; ++b) {
        m(static_cast<Eigen::Index>(b ^ ax), static_cast<Eigen::Index>(b)) = (popcount(b & az) & 1) ? -phase : phase;
    }
    return m;
}

std::uint64_t count(int n) {
    check_n(n);
    return std::uint64_t{1} << (2 * n);
}

Enumeration::Enumeration(int n) : n_(n) { check_n(n); }

}  // namespace pauli

}  // namespace srent
