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

#include "srent/clifford.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <optional>
#include <utility>

#include "srent/errors.hpp"

namespace srent {

namespace {

SignedPauli signed_product(const SignedPauli& a, const SignedPauli& b, int& i_exponent) {
    const auto prod = pauli::mul(a.pauli, b.pauli);
    i_exponent += exponent(prod.phase);
    return {prod.pauli, a.sign * b.sign};
}

SignedPauli make(int n, int q, char which, int sign = 1) { return {PauliString::single(n, q, which), sign}; }

}  // namespace

CliffordTableau CliffordTableau::identity(int n) {
    std::vector<SignedPauli> xs, zs;
    for (int q = 0; q < n; ++q) {
        xs.push_back(make(n, q, 'X'));
        zs.push_back(make(n, q, 'Z'));
    }
    return CliffordTableau(n, std::move(xs), std::move(zs));
}

CliffordTableau CliffordTableau::from_images(std::vector<SignedPauli> x_images, std::vector<SignedPauli> z_images) {
    const int n = static_cast<int>(x_images.size());
    if (n < 1 || z_images.size() != x_images.size()) throw DimensionError("tableau needs n X images and n Z images");
    for (const auto& v : {std::cref(x_images), std::cref(z_images)}) {
        for (const auto& s : v.get()) {
            if (s.pauli.n != n) throw DimensionError("tableau image has the wrong qubit count");
            if (s.sign != 1 && s.sign != -1) throw DomainError("tableau sign must be +1 or -1");
        }
    }
    CliffordTableau t(n, std::move(x_images), std::move(z_images));
    if (!t.is_symplectic()) throw DomainError("generator images violate the symplectic relations");
    return t;
}

CliffordTableau CliffordTableau::from_gate(int n, const Gate& gate) {
    auto t = identity(n);
    const int q = gate.qubits[0];
    for (int i = 0; i < gate.arity(); ++i) {
        if (gate.qubits[static_cast<std::size_t>(i)] < 0 || gate.qubits[static_cast<std::size_t>(i)] >= n) {
            throw DimensionError("gate qubit out of range");
        }
    }
    auto& xs = t.x_images_;
    auto& zs = t.z_images_;
    const auto uq = static_cast<std::size_t>(q);
    switch (gate.kind) {
        case GateKind::kH:
            std::swap(xs[uq], zs[uq]);
            break;
        case GateKind::kS:
            xs[uq] = make(n, q, 'Y');
            break;
        case GateKind::kX:
            zs[uq].sign = -1;
            break;
        case GateKind::kZ:
            xs[uq].sign = -1;
            break;
        case GateKind::kCnot: {
            const int c = gate.qubits[0], tq = gate.qubits[1];
            xs[static_cast<std::size_t>(c)].pauli.x |= 1u << tq;
            zs[static_cast<std::size_t>(tq)].pauli.z |= 1u << c;
            break;
        }
        case GateKind::kPhase: {
            if (!gate.is_clifford()) throw DomainError("phase gate angle is not a multiple of pi/2");
            const long k = ((std::lround(gate.theta / (std::numbers::pi / 2)) % 4) + 4) % 4;
            // S^k: X -> Y -> -X -> -Y.
            static constexpr std::array<std::pair<char, int>, 4> kImages{{{'X', 1}, {'Y', 1}, {'X', -1}, {'Y', -1}}};
            xs[uq] = make(n, q, kImages[static_cast<std::size_t>(k)].first, kImages[static_cast<std::size_t>(k)].second);
            break;
        }
    }
    return t;
}

CliffordTableau CliffordTableau::from_circuit(const Circuit& circuit) {
    auto t = identity(circuit.num_qubits);
    for (const auto& g : circuit.gates) t = clifford::compose(from_gate(circuit.num_qubits, g), t);
    return t;
}

std::vector<std::vector<std::uint8_t>> CliffordTableau::symplectic_matrix() const {
    const auto nn = static_cast<std::size_t>(2 * n_);
    std::vector<std::vector<std::uint8_t>> m(nn, std::vector<std::uint8_t>(nn, 0));
    for (int q = 0; q < n_; ++q) {
        for (int r = 0; r < 2; ++r) {
            const auto& p = (r == 0 ? x_image(q) : z_image(q)).pauli;
            auto& row = m[static_cast<std::size_t>(2 * q + r)];
            for (int j = 0; j < n_; ++j) {
                row[static_cast<std::size_t>(2 * j)] = (p.x >> j) & 1u;
                row[static_cast<std::size_t>(2 * j + 1)] = (p.z >> j) & 1u;
            }
        }
    }
    return m;
}

std::vector<std::uint8_t> CliffordTableau::sign_bits() const {
    std::vector<std::uint8_t> bits;
    for (int q = 0; q < n_; ++q) {
        bits.push_back(x_image(q).sign < 0);
        bits.push_back(z_image(q).sign < 0);
    }
    return bits;
}

bool CliffordTableau::is_symplectic() const {
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            const bool xx = pauli::commutes(x_image(a).pauli, x_image(b).pauli);
            const bool zz = pauli::commutes(z_image(a).pauli, z_image(b).pauli);
            const bool xz = pauli::commutes(x_image(a).pauli, z_image(b).pauli);
            if (!xx || !zz || xz == (a == b)) return false;
        }
    }
    return true;
}

std::string CliffordTableau::key() const {
    std::string k;
    for (int q = 0; q < n_; ++q) {
        for (const auto* s : {&x_image(q), &z_image(q)}) {
            k += s->sign < 0 ? '-' : '+';
            k += s->pauli.label();
            k += ' ';
        }
    }
    return k;
}

bool StabilizerStateSet::contains(const StateVector& psi) const {
    return psi.num_qubits() == n && keys.count(clifford::phase_canonical_key(psi)) > 0;
}

namespace clifford {

SignedPauli conjugate_pauli(const CliffordTableau& c, const PauliString& p) {
    if (p.n != c.num_qubits()) throw DimensionError("Pauli and tableau qubit counts differ");
    // P = i^{|x&z|} prod_q X_q^{x_q} prod_q Z_q^{z_q}; conjugate factor by factor.
    int k = std::popcount(p.x & p.z);
    SignedPauli acc{PauliString::identity(p.n), 1};
    for (int q = 0; q < p.n; ++q) {
        if ((p.x >> q) & 1u) acc = signed_product(acc, c.x_image(q), k);
    }
    for (int q = 0; q < p.n; ++q) {
        if ((p.z >> q) & 1u) acc = signed_product(acc, c.z_image(q), k);
    }
    k = ((k % 4) + 4) % 4;
    // A Clifford maps Hermitian Paulis to Hermitian Paulis, so k is even here.
    if (k == 2) acc.sign = -acc.sign;
    return acc;
}

SignedPauli conjugate_pauli(const CliffordTableau& c, const SignedPauli& p) {
    auto r = conjugate_pauli(c, p.pauli);
    r.sign *= p.sign;
    return r;
}

CliffordTableau compose(const CliffordTableau& after, const CliffordTableau& before) {
    if (after.num_qubits() != before.num_qubits()) throw DimensionError("tableau qubit counts differ");
    std::vector<SignedPauli> xs, zs;
    for (int q = 0; q < before.num_qubits(); ++q) {
        xs.push_back(conjugate_pauli(after, before.x_image(q)));
        zs.push_back(conjugate_pauli(after, before.z_image(q)));
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

namespace {

// Binary vectors in the interleaved basis (x_0, z_0, x_1, z_1, ...).
using Bits = std::vector<std::uint8_t>;

int symplectic_inner(const Bits& v, const Bits& w) {
    int s = 0;
    for (std::size_t i = 0; i < v.size(); i += 2) s += v[i] * w[i + 1] + v[i + 1] * w[i];
    return s & 1;
}

Bits transvection(const Bits& k, const Bits& v) {
    if (!symplectic_inner(k, v)) return v;
    Bits out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] ^ k[i];
    return out;
}

using Transvections = std::pair<Bits, Bits>;

Bits apply_pair(const Transvections& t, const Bits& v) { return transvection(t.second, transvection(t.first, v)); }

Bits add(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

/// Two transvections taking nonzero x to nonzero y.
Transvections find_transvection(const Bits& x, const Bits& y) {
    const std::size_t nn = x.size();
    Transvections out{Bits(nn, 0), Bits(nn, 0)};
    if (x == y) return out;
    if (symplectic_inner(x, y)) {
        out.first = add(x, y);
        return out;
    }
    Bits z(nn, 0);
    // A qubit where both are nonzero.
    for (std::size_t i = 0; i < nn; i += 2) {
        if ((x[i] | x[i + 1]) && (y[i] | y[i + 1])) {
            z[i] = x[i] ^ y[i];
            z[i + 1] = x[i + 1] ^ y[i + 1];
            if (!(z[i] | z[i + 1])) {
                z[i + 1] = 1;
                if (x[i] != x[i + 1]) z[i] = 1;
            }
            out.first = add(x, z);
            out.second = add(y, z);
            return out;
        }
    }
    // Disjoint supports: pick z anticommuting with x on one qubit and with y on another.
    for (std::size_t i = 0; i < nn; i += 2) {
        if ((x[i] | x[i + 1]) && !(y[i] | y[i + 1])) {
            if (x[i] == x[i + 1]) {
                z[i + 1] = 1;
            } else {
                z[i + 1] = x[i];
                z[i] = x[i + 1];
            }
            break;
        }
    }
    for (std::size_t i = 0; i < nn; i += 2) {
        if (!(x[i] | x[i + 1]) && (y[i] | y[i + 1])) {
            if (y[i] == y[i + 1]) {
                z[i + 1] = 1;
            } else {
                z[i + 1] = y[i];
                z[i] = y[i + 1];
            }
            break;
        }
    }
    out.first = add(x, z);
    out.second = add(y, z);
    return out;
}

/// Uniform element of Sp(2n, F2): the index-to-group bijection of the
/// transvection construction driven by uniform random digits.
std::vector<Bits> random_symplectic(int n, Rng& rng) {
    const std::size_t nn = static_cast<std::size_t>(2 * n);
    Bits f1(nn, 0);
    bool nonzero = false;
    while (!nonzero) {
        for (auto& b : f1) b = rng.coin();
        for (auto b : f1) nonzero = nonzero || b;
    }
    Bits e1(nn, 0);
    e1[0] = 1;
    const Transvections t = find_transvection(e1, f1);

    Bits bits(nn - 1);
    for (auto& b : bits) b = rng.coin();
    Bits eprime = e1;
    for (std::size_t j = 2; j < nn; ++j) eprime[j] = bits[j - 1];
    const Bits h0 = apply_pair(t, eprime);
    if (bits[0]) std::fill(f1.begin(), f1.end(), 0);

    std::vector<Bits> g(nn, Bits(nn, 0));
    g[0][0] = 1;
    g[1][1] = 1;
    if (n > 1) {
        const auto inner = random_symplectic(n - 1, rng);
        for (std::size_t r = 0; r + 2 < nn; ++r) {
            for (std::size_t c = 0; c + 2 < nn; ++c) g[r + 2][c + 2] = inner[r][c];
        }
    }
    for (auto& row : g) {
        row = apply_pair(t, row);
        row = transvection(h0, row);
        row = transvection(f1, row);
    }
    return g;
}

PauliString pauli_from_bits(int n, const Bits& v) {
    PauliString p{n, 0, 0};
    for (int q = 0; q < n; ++q) {
        p.x |= static_cast<std::uint32_t>(v[static_cast<std::size_t>(2 * q)]) << q;
        p.z |= static_cast<std::uint32_t>(v[static_cast<std::size_t>(2 * q + 1)]) << q;
    }
    return p;
}

}  // namespace

CliffordTableau random_clifford(int n, Rng& rng) {
    if (n < 1 || n > kMaxPauliQubits) throw DimensionError("random_clifford: qubit count out of range");
    const auto g = random_symplectic(n, rng);
    std::vector<SignedPauli> xs, zs;
    for (int q = 0; q < n; ++q) {
        xs.push_back({pauli_from_bits(n, g[static_cast<std::size_t>(2 * q)]), rng.coin() ? -1 : 1});
        zs.push_back({pauli_from_bits(n, g[static_cast<std::size_t>(2 * q + 1)]), rng.coin() ? -1 : 1});
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

CliffordTableau random_clifford(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_clifford(n, rng);
}

Circuit to_circuit(const CliffordTableau& c) {
    const int n = c.num_qubits();
    std::vector<SignedPauli> xs, zs;
    for (int q = 0; q < n; ++q) {
        xs.push_back(c.x_image(q));
        zs.push_back(c.z_image(q));
    }
    // Left-multiply by gates until the tableau is the identity; the circuit is
    // the inverse of the gates applied, in reverse order.
    std::vector<Gate> applied;
    auto apply = [&](const Gate& g) {
        const auto gt = CliffordTableau::from_gate(n, g);
        for (auto& r : xs) r = conjugate_pauli(gt, r);
        for (auto& r : zs) r = conjugate_pauli(gt, r);
        applied.push_back(g);
    };

    for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        // X image of qubit i -> X_i. Rows for qubits < i are already reduced,
        // so the remaining rows are supported on qubits >= i.
        for (int j = i; j < n; ++j) {
            const char pj = xs[ui].pauli.at(j);
            if (pj == 'Z') apply(Gate::h(j));
            if (pj == 'Y') apply(Gate::s(j));
        }
        if (!((xs[ui].pauli.x >> i) & 1u)) {
            int k = i + 1;
            while (!((xs[ui].pauli.x >> k) & 1u)) ++k;
            apply(Gate::cnot(k, i));
        }
        for (int j = i + 1; j < n; ++j) {
            if ((xs[ui].pauli.x >> j) & 1u) apply(Gate::cnot(i, j));
        }
        // Z image of qubit i -> Z_i while keeping X_i fixed.
        if (zs[ui].pauli.at(i) == 'Y') {
            apply(Gate::h(i));
            apply(Gate::s(i));
            apply(Gate::h(i));
        }
        for (int j = i + 1; j < n; ++j) {
            const char pj = zs[ui].pauli.at(j);
            if (pj == 'X') apply(Gate::h(j));
            if (pj == 'Y') {
                apply(Gate::s(j));
                apply(Gate::h(j));
            }
            if (pj != 'I') apply(Gate::cnot(j, i));
        }
    }
    for (int i = 0; i < n; ++i) {
        if (xs[static_cast<std::size_t>(i)].sign < 0) apply(Gate::z(i));
        if (zs[static_cast<std::size_t>(i)].sign < 0) apply(Gate::x(i));
    }

    Circuit out{n, {}};
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        if (it->kind == GateKind::kS) {
            // S^dagger = S^3.
            for (int r = 0; r < 3; ++r) out.gates.push_back(*it);
        } else {
            out.gates.push_back(*it);
        }
    }
    return out;
}

UnitaryMatrix to_unitary(const CliffordTableau& c) { return circuits::to_unitary(to_circuit(c)); }

StateVector apply(const CliffordTableau& c, const StateVector& psi) { return circuits::apply(to_circuit(c), psi); }

std::uint64_t stabilizer_state_count(int n) {
    std::uint64_t count = std::uint64_t{1} << n;
    for (int k = 1; k <= n; ++k) count *= (std::uint64_t{1} << k) + 1;
    return count;
}

std::vector<std::int64_t> phase_canonical_key(const StateVector& psi) {
    const auto& a = psi.amplitudes();
    Complex rot = 1.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a[i]) > 1e-6) {
            rot = std::conj(a[i]) / std::abs(a[i]);
            break;
        }
    }
    std::vector<std::int64_t> key;
    key.reserve(static_cast<std::size_t>(2 * a.size()));
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const Complex v = a[i] * rot;
        key.push_back(std::llround(v.real() * 1e9));
        key.push_back(std::llround(v.imag() * 1e9));
    }
    return key;
}

StabilizerStateSet enumerate_stabilizer_states(int n, bool allow_large) {
    if (n < 1) throw DimensionError("enumerate_stabilizer_states: n must be positive");
    if (n > 4 || (n > kMaxStabilizerEnumeration && !allow_large)) {
        throw CostGuardError("stabilizer enumeration is limited to n <= 3 (n = 4 with the override)");
    }
    std::vector<Gate> generators;
    for (int q = 0; q < n; ++q) {
        generators.push_back(Gate::h(q));
        generators.push_back(Gate::s(q));
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b) generators.push_back(Gate::cnot(a, b));
        }
    }
    StabilizerStateSet set{n, {}, {}};
    std::vector<StateVector> frontier{StateVector::zero(n)};
    set.keys.insert(phase_canonical_key(frontier.front()));
    set.states.push_back(frontier.front());
    while (!frontier.empty()) {
        std::vector<StateVector> next;
        for (const auto& psi : frontier) {
            for (const auto& g : generators) {
                CVector amps = psi.amplitudes();
                circuits::apply_inplace(amps, n, g);
                StateVector out = StateVector::normalized(n, std::move(amps));
                if (set.keys.insert(phase_canonical_key(out)).second) {
                    set.states.push_back(out);
                    next.push_back(std::move(out));
                }
            }
        }
        frontier = std::move(next);
    }
    return set;
}

const StabilizerStateSet& stabilizer_states(int n, bool allow_large) {
    if (n < 1) throw DimensionError("stabilizer_states: n must be positive");
    if (n > 4 || (n > kMaxStabilizerEnumeration && !allow_large)) {
        throw CostGuardError("stabilizer enumeration is limited to n <= 3 (n = 4 with the override)");
    }
    static std::array<std::once_flag, 5> once;
    static std::array<std::optional<StabilizerStateSet>, 5> cache;
    const auto un = static_cast<std::size_t>(n);
    std::call_once(once[un], [&] { cache[un] = enumerate_stabilizer_states(n, true); });
    return *cache[un];
}

}  // namespace clifford

}  // namespace srent
