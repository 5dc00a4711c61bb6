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

#include "srent/chaos.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "srent/errors.hpp"
#include "srent/parallel.hpp"

namespace srent {

DopedCircuit DopedCircuit::sample(int n, int k, double theta, Rng& rng) {
    if (k < 0) throw DomainError("doping count must be nonnegative");
    DopedCircuit c;
    c.n = n;
    c.k = k;
    c.theta = theta;
    for (int i = 0; i <= k; ++i) {
        c.cliffords.push_back(clifford::random_clifford(n, rng));
        if (i < k) c.phase_qubits.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    }
    return c;
}

UnitaryMatrix DopedCircuit::to_unitary() const {
    CMatrix u = clifford::to_unitary(cliffords.front()).entries();
    const CMatrix p = gates::phase(theta);
    for (int i = 0; i < k; ++i) {
        const int q = phase_qubits[static_cast<std::size_t>(i)];
        u = u * states::embed_gate(p, std::span<const int>(&q, 1), n) *
            clifford::to_unitary(cliffords[static_cast<std::size_t>(i + 1)]).entries();
    }
    return UnitaryMatrix(n, std::move(u));
}

namespace chaos {

namespace {

CMatrix heisenberg(const UnitaryMatrix& u, const PauliString& p) {
    return u.entries().adjoint() * pauli::to_matrix(p) * u.entries();
}

void check_sizes(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2) {
    if (p1.n != u.num_qubits() || p2.n != u.num_qubits()) throw DimensionError("Pauli and unitary sizes differ");
}

}  // namespace

double f_theta(double d, double theta) {
    if (!(d >= 2.0)) throw DomainError("f(theta) needs d >= 2");
    return (7.0 * d * d - 3.0 * d + d * (d + 3.0) * std::cos(4.0 * theta) - 8.0) / (8.0 * (d * d - 1.0));
}

double doped_power_analytic(int n, int k, double theta) {
    const double d = static_cast<double>(std::size_t{1} << n);
    return 1.0 - (4.0 + (d - 1.0) * std::pow(f_theta(d, theta), k)) / (3.0 + d);
}

StateVector doped_state(int n, int k, double theta, Rng& rng) {
    return DopedCircuit::sample(n, k, theta, rng).to_unitary() * StateVector::zero(n);
}

std::vector<double> doped_power_samples(int n, int k, double theta, std::size_t samples, std::uint64_t seed) {
    return parallel_map(samples, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        return power::power_trace(DopedCircuit::sample(n, k, theta, rng).to_unitary()).m_lin;
    });
}

EstimatorResult doped_power_experiment(int n, int k, double theta, std::size_t samples, std::uint64_t seed) {
    const auto values = doped_power_samples(n, k, theta, samples, seed);
    const auto s = summarize(values);
    EstimatorResult r;
    r.estimate = s.mean;
    r.std_error = s.std_error;
    r.samples = samples;
    r.seed = seed;
    r.spread = s.std_dev;
    r.analytic = doped_power_analytic(n, k, theta);
    return r;
}

Complex otoc2(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2, const StateVector& psi) {
    check_sizes(u, p1, p2);
    const CVector& a = psi.amplitudes();
    return a.dot(heisenberg(u, p1) * (pauli::to_matrix(p2) * a));
}

Complex otoc2_traced(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2) {
    check_sizes(u, p1, p2);
    return (heisenberg(u, p1) * pauli::to_matrix(p2)).trace() / static_cast<double>(u.dim());
}

namespace {

Complex otoc8_from(const CMatrix& a, const CMatrix& p3, const CMatrix& p4, const CMatrix& p5, const CMatrix& p6) {
    const CMatrix m = a * p3 * p4 * a * p4 * p5 * a * p5 * p6 * a * p6 * p3;
    return m.trace() / static_cast<double>(a.rows());
}

}  // namespace

Complex otoc8_string(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2, const PauliString& p3,
                     const PauliString& p4, const PauliString& p5, const PauliString& p6) {
    check_sizes(u, p1, p2);
    const CMatrix a = heisenberg(u, p1) * pauli::to_matrix(p2);
    return otoc8_from(a, pauli::to_matrix(p3), pauli::to_matrix(p4), pauli::to_matrix(p5), pauli::to_matrix(p6));
}

double otoc8_pauli_average_direct(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2,
                                  bool allow_large) {
    check_sizes(u, p1, p2);
    const int n = u.num_qubits();
    if (n > 1 && !allow_large) throw CostGuardError("direct 8-OTOC enumeration is limited to n = 1 without override");
    const CMatrix a = heisenberg(u, p1) * pauli::to_matrix(p2);
    std::vector<CMatrix> ps;
    for (const auto& p : pauli::enumerate(n)) ps.push_back(pauli::to_matrix(p));
    const std::size_t m = ps.size();
    const auto partial = parallel_map(m, [&](std::size_t i3) {
        Complex acc{0.0, 0.0};
        for (std::size_t i4 = 0; i4 < m; ++i4) {
            for (std::size_t i5 = 0; i5 < m; ++i5) {
                for (std::size_t i6 = 0; i6 < m; ++i6) acc += otoc8_from(a, ps[i3], ps[i4], ps[i5], ps[i6]);
            }
        }
        return acc;
    });
    Complex total{0.0, 0.0};
    for (const auto& v : partial) total += v;
    return total.real() / std::pow(static_cast<double>(m), 4);
}

double otoc8_pauli_average_exact(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2) {
    check_sizes(u, p1, p2);
    const CMatrix a = heisenberg(u, p1) * pauli::to_matrix(p2);
    // tr(A P3 P4 A P4 P5 A P5 P6 A P6 P3) = tr(P3 A P3 . P4 A P4 . P5 A P5 . P6 A P6), and the P_i are independent.
    CMatrix twirl = CMatrix::Zero(a.rows(), a.cols());
    for (const auto& p : pauli::enumerate(u.num_qubits())) {
        const CMatrix pm = pauli::to_matrix(p);
        twirl += pm * a * pm;
    }
    twirl /= static_cast<double>(pauli::count(u.num_qubits()));
    const CMatrix t2 = twirl * twirl;
    return (t2 * t2).trace().real() / static_cast<double>(u.dim());
}

EstimatorResult otoc8_pauli_average_sampled(const UnitaryMatrix& u, const PauliString& p1, const PauliString& p2,
                                            std::size_t samples, std::uint64_t seed) {
    check_sizes(u, p1, p2);
    const int n = u.num_qubits();
    const CMatrix a = heisenberg(u, p1) * pauli::to_matrix(p2);
    const std::uint64_t count = pauli::count(n);
    const auto values = parallel_map(samples, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        std::array<CMatrix, 4> ps;
        for (auto& p : ps) p = pauli::to_matrix(PauliString::from_index(n, rng.below(count)));
        return otoc8_from(a, ps[0], ps[1], ps[2], ps[3]).real();
    });
    const auto s = summarize(values);
    EstimatorResult r;
    r.estimate = s.mean;
    r.std_error = s.std_error;
    r.samples = samples;
    r.seed = seed;
    r.spread = s.std_dev;
    r.analytic = std::pow(otoc2_traced(u, p1, p2).real(), 4);
    return r;
}

namespace {

/// sum over i1..i4 of prod_k B[i_k, i_{perm(k)}], for every permutation of four factors.
Complex permutation_contraction(const CMatrix& b) {
    const auto d = static_cast<std::size_t>(b.rows());
    Complex total{0.0, 0.0};
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<std::size_t, 4> idx{};
    do {
        for (idx[0] = 0; idx[0] < d; ++idx[0]) {
            for (idx[1] = 0; idx[1] < d; ++idx[1]) {
                for (idx[2] = 0; idx[2] < d; ++idx[2]) {
                    for (idx[3] = 0; idx[3] < d; ++idx[3]) {
                        Complex term{1.0, 0.0};
                        for (std::size_t k = 0; k < 4; ++k) {
                            term *= b(static_cast<Eigen::Index>(idx[k]),
                                      static_cast<Eigen::Index>(idx[static_cast<std::size_t>(perm[k])]));
                        }
                        total += term;
                    }
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

double otoc_coefficient(double d) { return d * d * (d + 3.0) / (4.0 * (d + 4.0)); }

}  // namespace

PowerResult power_from_otoc(const UnitaryMatrix& u, bool allow_large) {
    const int n = u.num_qubits();
    if (n > power::kMaxCommutatorQubits && !allow_large) {
        throw CostGuardError("power_from_otoc is limited to n <= 2 without an explicit override");
    }
    const double d = static_cast<double>(u.dim());
    const double d_sym = d * (d + 1.0) * (d + 2.0) * (d + 3.0) / 24.0;
    std::vector<CMatrix> ps;
    for (const auto& p : pauli::enumerate(n)) ps.push_back(pauli::to_matrix(p));
    const auto partial = parallel_map(ps.size(), [&](std::size_t i) {
        const CMatrix heis = u.entries().adjoint() * ps[i] * u.entries();
        Complex acc{0.0, 0.0};
        for (const auto& p2 : ps) acc += permutation_contraction(heis * p2) / (24.0 * d_sym);
        return acc;
    });
    Complex total{0.0, 0.0};
    for (const auto& v : partial) total += v;
    const double mean_fourth = total.real() / static_cast<double>(ps.size() * ps.size());
    PowerResult r;
    r.m_lin = 1.0 - 4.0 / (4.0 + d) - otoc_coefficient(d) * mean_fourth;
    r.m2_lower = -std::log2(1.0 - r.m_lin);
    r.method = "otoc";
    return r;
}

EstimatorResult power_from_otoc_sampled(const UnitaryMatrix& u, std::size_t states, std::uint64_t seed) {
    const int n = u.num_qubits();
    const double d = static_cast<double>(u.dim());
    std::vector<CMatrix> ps;
    for (const auto& p : pauli::enumerate(n)) ps.push_back(pauli::to_matrix(p));
    std::vector<CMatrix> heis;
    for (const auto& p : ps) heis.push_back(u.entries().adjoint() * p * u.entries());
    const auto values = parallel_map(states, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        const CVector psi = states::haar_state(n, rng).amplitudes();
        std::vector<CVector> p2psi;
        for (const auto& p : ps) p2psi.push_back(p * psi);
        Complex acc{0.0, 0.0};
        for (const auto& h : heis) {
            const CVector hpsi = h * psi;
            for (const auto& v : p2psi) {
                const Complex o = hpsi.dot(v);
                acc += (o * o) * (o * o);
            }
        }
        const double mean_fourth = acc.real() / static_cast<double>(ps.size() * ps.size());
        return 1.0 - 4.0 / (4.0 + d) - otoc_coefficient(d) * mean_fourth;
    });
    const auto s = summarize(values);
    EstimatorResult r;
    r.estimate = s.mean;
    r.std_error = s.std_error;
    r.samples = states;
    r.seed = seed;
    r.spread = s.std_dev;
    r.analytic = power::power_trace(u, true).m_lin;
    return r;
}

double haar_otoc8_analytic(double d) {
    const double d2 = d * d;
    if (std::abs(d2 - 9.0) < 1e-12) throw DomainError("the Haar 8-OTOC average is singular at d = 3");
    return 4.0 * (d2 * d2 - 9.0 * d2 + 6.0) / (std::pow(d, 6) * (d2 - 9.0));
}

HaarOtocReport haar_otoc8_experiment(int n, std::size_t samples, std::uint64_t seed) {
    if (n < 2) throw DimensionError("the Haar 8-OTOC experiment needs n >= 2");
    const double d = static_cast<double>(std::size_t{1} << n);
    struct Sample {
        double otoc8 = 0.0;
        double m_lin = 0.0;
    };
    const auto values = parallel_map(samples, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        const auto u = states::haar_unitary(n, rng);
        double acc = 0.0;
        const std::uint64_t count = pauli::count(n);
        for (std::uint64_t a = 0; a < count; ++a) {
            const CMatrix heis = heisenberg(u, PauliString::from_index(n, a));
            for (std::uint64_t b = 0; b < count; ++b) {
                const double o = (heis * pauli::to_matrix(PauliString::from_index(n, b))).trace().real() / d;
                acc += o * o * o * o;
            }
        }
        return Sample{acc / static_cast<double>(count * count), power::power_trace(u, true).m_lin};
    });
    std::vector<double> o8, ml;
    double gap = 0.0;
    for (const auto& v : values) {
        o8.push_back(v.otoc8);
        ml.push_back(v.m_lin);
        gap += v.m_lin - (1.0 - (4.0 + otoc_coefficient(d) * (d + 4.0) * v.otoc8) / (d + 4.0));
    }
    auto fill = [&](const std::vector<double>& xs, std::optional<double> analytic) {
        const auto s = summarize(xs);
        EstimatorResult r;
        r.estimate = s.mean;
        r.std_error = s.std_error;
        r.samples = samples;
        r.seed = seed;
        r.spread = s.std_dev;
        r.analytic = analytic;
        return r;
    };
    HaarOtocReport report;
    report.otoc8 = fill(o8, haar_otoc8_analytic(d));
    report.m_lin = fill(ml, power::haar_average(d));
    report.relation_gap = samples > 0 ? gap / static_cast<double>(samples) : 0.0;
    return report;
}

}  // namespace chaos

}  // namespace srent
