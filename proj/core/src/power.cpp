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

#include "srent/power.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "srent/clifford.hpp"
#include "srent/errors.hpp"
#include "srent/magic.hpp"
#include "srent/parallel.hpp"
#include "srent/pauli.hpp"

namespace srent::power {

namespace {

void guard(int n, int limit, bool allow_large, const char* what) {
    if (n > limit && !allow_large) {
        throw CostGuardError(std::string(what) + " is limited to n <= " + std::to_string(limit) +
                             " without an explicit override");
    }
}

PowerResult make_result(double m_lin, std::string method) {
    PowerResult r;
    r.m_lin = m_lin;
    r.m2_lower = -std::log2(1.0 - m_lin);
    r.method = std::move(method);
    return r;
}

std::vector<CMatrix> pauli_matrices(int n) {
    std::vector<CMatrix> out;
    out.reserve(pauli::count(n));
    for (const auto& p : pauli::enumerate(n)) out.push_back(pauli::to_matrix(p));
    return out;
}

}  // namespace

double d_plus(double d) { return (d + 1.0) * (d + 2.0) / 6.0; }

Complex symmetric_fourth_trace(const CMatrix& b) {
    const CMatrix b2 = b * b;
    const Complex t1 = b.trace();
    const Complex t2 = b2.trace();
    const Complex t3 = (b2 * b).trace();
    const Complex t4 = (b2.cwiseProduct(b2.transpose())).sum();
    return (t1 * t1 * t1 * t1 + 6.0 * t2 * t1 * t1 + 3.0 * t2 * t2 + 8.0 * t3 * t1 + 6.0 * t4) / 24.0;
}

PowerResult power_enumerate(const UnitaryMatrix& u, bool allow_large) {
    const int n = u.num_qubits();
    guard(n, clifford::kMaxStabilizerEnumeration, allow_large, "stabilizer enumeration");
    const auto& set = clifford::stabilizer_states(n, allow_large);
    struct Pair {
        double lin = 0.0;
        double m2 = 0.0;
    };
    const auto values = parallel_map(set.size(), [&](std::size_t i) {
        const auto xi = magic::xi_distribution(u * set.states[i]);
        return Pair{magic::linear_entropy(xi), magic::renyi_entropy(xi, 2.0)};
    });
    double lin = 0.0, m2 = 0.0;
    for (const auto& v : values) {
        lin += v.lin;
        m2 += v.m2;
    }
    const double count = static_cast<double>(set.size());
    auto r = make_result(lin / count, "enumerate");
    r.m2_exact = m2 / count;
    return r;
}

PowerResult power_trace(const UnitaryMatrix& u, bool allow_large) {
    const int n = u.num_qubits();
    guard(n, kMaxTraceQubits, allow_large, "power_trace");
    const double d = static_cast<double>(u.dim());
    const auto paulis = pauli_matrices(n);
    const CMatrix& um = u.entries();
    const CMatrix ud = um.adjoint();
    // One task per P1; each sums tr(B^(x)4 Pi_sym) over all P2 in a fixed order.
    const auto partial = parallel_map(paulis.size(), [&](std::size_t i) {
        const CMatrix heis = ud * paulis[i] * um;
        Complex acc{0.0, 0.0};
        for (const auto& p2 : paulis) acc += symmetric_fourth_trace(heis * p2);
        return acc;
    });
    Complex total{0.0, 0.0};
    for (const auto& v : partial) total += v;
    const double avg = total.real() / std::pow(d, 4);
    return make_result(1.0 - 4.0 / (4.0 + d) - d / ((4.0 + d) * d_plus(d)) * avg, "trace");
}

namespace {

/// Index of the basis vector obtained by permuting the four tensor factors of `index`.
std::size_t permute_factors(std::size_t index, const std::array<int, 4>& perm, int n) {
    const std::size_t mask = (std::size_t{1} << n) - 1;
    std::array<std::size_t, 4> digits{};
    for (int k = 0; k < 4; ++k) digits[static_cast<std::size_t>(k)] = (index >> (n * (3 - k))) & mask;
    std::size_t out = 0;
    for (int k = 0; k < 4; ++k) out = (out << n) | digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
    return out;
}

CMatrix kron4(const CMatrix& a) {
    const CMatrix a2 = states::kron(a, a);
    return states::kron(a2, a2);
}

}  // namespace

double zero_power_diagnostic(const UnitaryMatrix& u, bool allow_large) {
    const int n = u.num_qubits();
    guard(n, kMaxCommutatorQubits, allow_large, "explicit four-copy matrices");
    const auto d = static_cast<std::size_t>(u.dim());
    const auto big = d * d * d * d;
    const auto bi = static_cast<Eigen::Index>(big);

    CMatrix q = CMatrix::Zero(bi, bi);
    for (const auto& p : pauli::enumerate(n)) q += kron4(pauli::to_matrix(p));
    q /= static_cast<double>(d * d);

    CMatrix sym = CMatrix::Zero(bi, bi);
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        for (std::size_t j = 0; j < big; ++j) {
            sym(static_cast<Eigen::Index>(permute_factors(j, perm, n)), static_cast<Eigen::Index>(j)) += 1.0;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    sym /= 24.0;

    const CMatrix qp = q * sym;
    const CMatrix u4 = kron4(u.entries());
    const CMatrix delta = u4.adjoint() * qp * u4 - qp;
    return delta.squaredNorm();
}

PowerResult power_from_commutator(const UnitaryMatrix& u, bool allow_large) {
    const double norm2 = zero_power_diagnostic(u, allow_large);
    const double d = static_cast<double>(u.dim());
    auto r = make_result(d / (2.0 * (4.0 + d) * d_plus(d)) * norm2, "commutator");
    r.commutator_norm2 = norm2;
    return r;
}

double unitary_stabilizer_nullity(const UnitaryMatrix& u, bool allow_large) {
    const int n = u.num_qubits();
    guard(n, kMaxTraceQubits, allow_large, "unitary stabilizer nullity");
    const double d = static_cast<double>(u.dim());
    const auto paulis = pauli_matrices(n);
    const CMatrix& um = u.entries();
    const CMatrix ud = um.adjoint();
    const auto counts = parallel_map(paulis.size(), [&](std::size_t i) {
        const CMatrix heis = ud * paulis[i] * um;
        std::uint64_t c = 0;
        for (const auto& p1 : paulis) {
            const double v = std::abs((p1.cwiseProduct(heis.transpose())).sum()) / d;
            if (v > 1.0 - kNullityTolerance) ++c;
        }
        return c;
    });
    const auto s = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    return 2.0 * static_cast<double>(n) - std::log2(static_cast<double>(s));
}

TCountBound tcount_lower_bound(double m_lin, double d) {
    if (!(d >= 2.0)) throw DomainError("T-count bound needs d >= 2");
    const double arg = d - (4.0 + d) * m_lin;
    TCountBound b;
    if (arg <= 0.0) {
        b.raw = std::numeric_limits<double>::infinity();
    } else {
        b.raw = -std::log2(arg) + std::log2(d + 3.0) - 2.0;
    }
    b.clamped = std::max(0.0, b.raw);
    return b;
}

TCountBound tcount_lower_bound(const PowerResult& result, double d) { return tcount_lower_bound(result.m_lin, d); }

double haar_average(double d) { return 1.0 - 4.0 / (d + 3.0); }

EstimatorResult haar_power_experiment(int n, std::size_t samples, std::uint64_t seed) {
    guard(n, kMaxTraceQubits, false, "power_trace");
    const auto values = parallel_map(samples, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        return power_trace(states::haar_unitary(n, rng)).m_lin;
    });
    const auto s = summarize(values);
    EstimatorResult r;
    r.estimate = s.mean;
    r.std_error = s.std_error;
    r.samples = samples;
    r.seed = seed;
    r.analytic = haar_average(static_cast<double>(std::size_t{1} << n));
    r.spread = s.std_dev;
    return r;
}

}  // namespace srent::power
