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

#include "srent/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "srent/chaos.hpp"
#include "srent/clifford.hpp"
#include "srent/errors.hpp"
#include "srent/magic.hpp"
#include "srent/power.hpp"
#include "srent/protocol.hpp"

namespace srent::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    Outcome() { detail.precision(6); }
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (passed) detail << "FAILED: ";
            passed = false;
            detail << what << "; ";
        }
    }
};

std::string str(double v, int precision = 6) {
    std::ostringstream ss;
    ss.precision(precision);
    ss << v;
    return ss.str();
}

/// Statistical agreement; a deterministic estimator (zero spread) must match to 1e-9.
bool agrees(const EstimatorResult& r, double sigmas) {
    const double gap = std::abs(r.estimate - r.analytic.value());
    return gap <= sigmas * r.std_error || gap <= 1e-9;
}

void magic_state_closed_form(Outcome& out, std::uint64_t) {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
        const auto xi = magic::xi_distribution(StateVector::magic_h(n));
        for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
            worst = std::max(worst, std::abs(magic::renyi_entropy(xi, alpha) - magic::magic_state_closed_form(n, alpha)));
        }
    }
    const double m2 = magic::renyi_entropy(StateVector::magic_h(1), 2.0);
    out.require(worst <= 1e-9, "closed-form mismatch " + str(worst));
    out.require(std::abs(m2 - (2.0 - std::log2(3.0))) <= 1e-9, "M_2(|H>) = " + str(m2, 12));
    out.detail << "max |M_alpha - closed form| = " << worst << " over n<=4; M_2(|H>) = " << str(m2, 10);
}

void faithfulness(Outcome& out, std::uint64_t) {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const auto& set = clifford::stabilizer_states(n);
        out.require(set.size() == clifford::stabilizer_state_count(n),
                    "n=" + std::to_string(n) + " enumerated " + std::to_string(set.size()));
        for (const auto& s : set.states) {
            const auto xi = magic::xi_distribution(s);
            for (double alpha : {0.0, 0.5, 1.0, 2.0, 3.0}) worst = std::max(worst, std::abs(magic::renyi_entropy(xi, alpha)));
        }
    }
    out.require(worst <= 1e-9, "stabilizer magic " + str(worst));
    for (int n = 1; n <= 6; ++n) {
        const auto support = magic::xi_distribution(StateVector::magic_h(n)).support();
        out.require(support == static_cast<std::size_t>(std::pow(3, n)),
                    "|H>^" + std::to_string(n) + " support " + std::to_string(support));
    }
    out.detail << "6/60/1080 states, max |M_alpha| = " << worst << "; 3^n support exact for n<=6";
}

void resource_properties(Outcome& out, std::uint64_t seed) {
    constexpr double kAlphas[] = {0.0, 0.5, 1.0, 2.0, 3.0};
    double inv = 0.0, add = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(seed, i);
        const int n = 1 + static_cast<int>(i % 3);
        const auto psi = i % 2 == 0 ? states::haar_state(n, rng) : chaos::doped_state(n, 2, kPi / 4.0, rng);
        const auto c = clifford::random_clifford(n, rng);
        const auto moved = clifford::apply(c, psi);
        const int m = n == 3 ? 0 : 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(3 - n)));
        for (double a : kAlphas) {
            inv = std::max(inv, std::abs(magic::renyi_entropy(moved, a) - magic::renyi_entropy(psi, a)));
            if (m > 0) {
                const auto phi = chaos::doped_state(m, 1, kPi / 4.0, rng);
                const double joint = magic::renyi_entropy(states::tensor(psi, phi), a);
                add = std::max(add, std::abs(joint - magic::renyi_entropy(psi, a) - magic::renyi_entropy(phi, a)));
            }
        }
    }
    out.require(inv <= 1e-9, "Clifford invariance " + str(inv));
    out.require(add <= 1e-9, "additivity " + str(add));

    double free_worst = 0.0, stab_worst = 0.0;
    for (std::size_t i = 0; i < 50; ++i) {
        Rng rng = Rng::stream(derive_seed(seed, 3), i);
        const int n = 1 + static_cast<int>(i % 3);
        const int g = static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1)));
        const auto chi = magic::random_free_state(n, g, rng);
        free_worst = std::max(free_worst, std::abs(magic::mixed_magic(chi)));

        const int nr = 1 + static_cast<int>(i % 2);
        const auto psi = chaos::doped_state(nr, 2, kPi / 4.0, rng);
        const double w = 0.2 + 0.8 * rng.uniform();
        CMatrix m = w * psi.amplitudes() * psi.amplitudes().adjoint() +
                    (1.0 - w) * CMatrix::Identity(static_cast<Eigen::Index>(psi.dim()), static_cast<Eigen::Index>(psi.dim())) /
                        static_cast<double>(psi.dim());
        const DensityMatrix rho(nr, m);
        const auto chi1 = magic::random_free_state(1, static_cast<int>(rng.below(2)), rng);
        stab_worst = std::max(stab_worst,
                              std::abs(magic::mixed_magic(states::tensor(rho, chi1)) - magic::mixed_magic(rho)));
    }
    out.require(free_worst <= 1e-9, "free-state M~_2 " + str(free_worst));
    out.require(stab_worst <= 1e-9, "tensor stability " + str(stab_worst));
    out.detail << "invariance " << inv << ", additivity " << add << ", free M~_2 " << free_worst << ", tensor "
               << stab_worst;
}

void bound_chain(Outcome& out, std::uint64_t seed) {
    std::size_t violations = 0;
    std::string first;
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng = Rng::stream(seed, i);
        const int n = 1 + static_cast<int>(i % 3);
        StateVector psi = StateVector::zero(n);
        switch ((i / 3) % 3) {
            case 0:
                psi = clifford::apply(clifford::random_clifford(n, rng), psi);
                break;
            case 1:
                psi = chaos::doped_state(n, 1 + static_cast<int>(rng.below(4)), kPi / 4.0, rng);
                break;
            default:
                psi = states::haar_state(n, rng);
                break;
        }
        const auto report = magic::bound_report(psi);
        for (const auto& b : report.bounds) {
            if (!b.holds) {
                if (violations == 0) first = "state " + std::to_string(i) + ": " + b.name;
                ++violations;
            }
        }
    }
    out.require(violations == 0, std::to_string(violations) + " violations, first " + first);
    out.detail << "200 states (stabilizer, T-doped, Haar), " << violations << " violations";
}

std::vector<UnitaryMatrix> unitary_suite(int n, std::uint64_t seed) {
    std::vector<UnitaryMatrix> out;
    for (std::size_t i = 0; i < 10; ++i) {
        Rng rng = Rng::stream(seed, i);
        switch (i % 3) {
            case 0:
                out.push_back(clifford::to_unitary(clifford::random_clifford(n, rng)));
                break;
            case 1:
                out.push_back(DopedCircuit::sample(n, 1 + static_cast<int>(i % 4), kPi / 4.0, rng).to_unitary());
                break;
            default:
                out.push_back(states::haar_unitary(n, rng));
                break;
        }
    }
    return out;
}

void power_agreement(Outcome& out, std::uint64_t seed) {
    double enum_gap = 0.0, otoc_gap = 0.0, comm_gap = 0.0;
    for (int n = 1; n <= 2; ++n) {
        for (const auto& u : unitary_suite(n, derive_seed(seed, static_cast<std::uint64_t>(n)))) {
            const double trace = power::power_trace(u).m_lin;
            enum_gap = std::max(enum_gap, std::abs(power::power_enumerate(u).m_lin - trace));
            otoc_gap = std::max(otoc_gap, std::abs(chaos::power_from_otoc(u).m_lin - trace));
            comm_gap = std::max(comm_gap, std::abs(power::power_from_commutator(u).m_lin - trace));
        }
    }
    out.require(enum_gap < 1e-9, "enumerate vs trace " + str(enum_gap));
    out.require(otoc_gap < 1e-9, "otoc vs trace " + str(otoc_gap));
    out.require(comm_gap <= 1e-8, "commutator vs trace " + str(comm_gap));
    out.detail << "20 unitaries: |enum-trace| " << enum_gap << ", |otoc-trace| " << otoc_gap << ", |comm-trace| "
               << comm_gap;
}

void haar_average(Outcome& out, std::uint64_t seed) {
    for (int n = 1; n <= 2; ++n) {
        const auto r = power::haar_power_experiment(n, 2000, derive_seed(seed, static_cast<std::uint64_t>(n)));
        out.require(agrees(r, 3.0), "n=" + std::to_string(n) + " z=" + str(r.z_score()));
        out.detail << (n > 1 ? "; " : "") << "n=" << n << ": " << r.estimate << " +- " << r.std_error << " vs " << *r.analytic
                   << " (z=" << str(r.z_score(), 3) << ", spread " << r.spread << ")";
    }
}

void doped_circuits(Outcome& out, std::uint64_t seed) {
    int worst_k = -1;
    double worst_z = 0.0;
    double clifford_column = 0.0;
    const double thetas[] = {kPi / 4.0, kPi / 3.0, kPi / 2.0};
    for (std::size_t t = 0; t < 3; ++t) {
        for (int k = 0; k <= 8; ++k) {
            const auto pt_seed = derive_seed(seed, t * 16 + static_cast<std::uint64_t>(k));
            const auto samples = chaos::doped_power_samples(2, k, thetas[t], 400, pt_seed);
            const auto s = summarize(samples);
            EstimatorResult r;
            r.estimate = s.mean;
            r.std_error = s.std_error;
            r.analytic = chaos::doped_power_analytic(2, k, thetas[t]);
            if (t == 2) {
                for (double v : samples) clifford_column = std::max(clifford_column, std::abs(v));
            }
            const double z = r.std_error > 0 ? std::abs(r.estimate - *r.analytic) / r.std_error : 0.0;
            if (z > worst_z && r.std_error > 1e-12) {
                worst_z = z;
                worst_k = k;
            }
            out.require(agrees(r, 3.0), "theta index " + std::to_string(t) + " k=" + std::to_string(k) + " mean " +
                                            str(r.estimate) + " vs " + str(*r.analytic));
        }
    }
    out.require(clifford_column <= 1e-9, "theta=pi/2 sample " + str(clifford_column));
    out.detail << "27 points x 400 samples, worst z " << str(worst_z, 3) << " (k=" << worst_k
               << "), max |theta=pi/2 sample| " << clifford_column;
}

void randomized_measurement(Outcome& out, std::uint64_t seed) {
    for (int n = 1; n <= 2; ++n) {
        const auto psi = StateVector::magic_h(n);
        const auto s = derive_seed(seed, static_cast<std::uint64_t>(n));
        auto exact = protocol::estimate_m2_exact(psi, 2000, s);
        exact.analytic = magic::magic_state_closed_form(n, 2.0);
        const auto shots = protocol::estimate_m2_shots(psi, 2000, 100, s);
        const double combined = std::sqrt(exact.std_error * exact.std_error + shots.std_error * shots.std_error);
        const double gap = std::abs(shots.estimate - exact.estimate);
        out.require(exact.within(2.0), "n=" + std::to_string(n) + " exact z=" + str(exact.z_score()));
        out.require(gap <= 3.0 * combined, "n=" + std::to_string(n) + " shots vs exact " + str(gap));
        out.detail << "n=" << n << ": exact " << exact.estimate << " +- " << exact.std_error << " (z "
                   << str(exact.z_score(), 3) << "), shots " << shots.estimate << " +- " << shots.std_error << "; ";
    }
    double kernel = 0.0;
    for (int n = 1; n <= 3; ++n) {
        for (std::size_t i = 0; i < 20; ++i) {
            Rng rng = Rng::stream(derive_seed(seed, 99 + static_cast<std::uint64_t>(n)), i);
            std::vector<double> p(std::size_t{1} << n);
            double total = 0.0;
            for (auto& v : p) total += (v = rng.uniform());
            for (auto& v : p) v /= total;
            kernel = std::max(kernel, std::abs(protocol::weighted_quad_sum(p) - protocol::weighted_quad_sum_naive(p)));
        }
    }
    out.require(kernel <= 1e-12, "fast vs naive kernel " + str(kernel));
    out.detail << "kernel gap " << kernel;
}

void otoc8(Outcome& out, std::uint64_t seed) {
    const auto report = chaos::haar_otoc8_experiment(2, 2000, seed);
    out.require(agrees(report.otoc8, 3.0), "Haar 8-OTOC z=" + str(report.otoc8.z_score()));
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        Rng rng = Rng::stream(derive_seed(seed, 5), i);
        const auto u = states::haar_unitary(1, rng);
        for (const auto& p1 : pauli::enumerate(1)) {
            for (const auto& p2 : pauli::enumerate(1)) {
                const double identity = std::pow(chaos::otoc2_traced(u, p1, p2).real(), 4);
                worst = std::max(worst, std::abs(chaos::otoc8_pauli_average_direct(u, p1, p2) - identity));
            }
        }
    }
    out.require(worst <= 1e-10, "n=1 enumeration gap " + str(worst));
    out.detail << "d=4: " << report.otoc8.estimate << " +- " << report.otoc8.std_error << " vs "
               << *report.otoc8.analytic << " (z " << str(report.otoc8.z_score(), 3) << "), mean M_lin "
               << report.m_lin.estimate << "; n=1 identity gap " << worst;
}

void tcount_bound(Outcome& out, std::uint64_t seed) {
    double worst_slack = -std::numeric_limits<double>::infinity();
    double clifford_clamped = 0.0;
    int violations = 0;
    std::string first;
    for (int n = 1; n <= 3; ++n) {
        const double d = static_cast<double>(std::size_t{1} << n);
        for (int t = 0; t <= 2; ++t) {
            for (std::size_t i = 0; i < 5; ++i) {
                Rng rng = Rng::stream(derive_seed(seed, static_cast<std::uint64_t>(n * 8 + t)), i);
                const auto u = DopedCircuit::sample(n, t, kPi / 4.0, rng).to_unitary();
                const auto bound = power::tcount_lower_bound(power::power_trace(u), d);
                worst_slack = std::max(worst_slack, bound.raw - t);
                if (bound.raw > t + 1e-9 && violations++ == 0) {
                    first = "n=" + std::to_string(n) + " t=" + std::to_string(t) + " bound " + str(bound.raw);
                }
                if (t == 0) clifford_clamped = std::max(clifford_clamped, bound.clamped);
            }
        }
    }
    out.require(violations == 0, std::to_string(violations) + " circuits exceed their T-count, first " + first);
    out.require(clifford_clamped == 0.0, "Clifford clamped bound " + str(clifford_clamped));
    out.detail << "45 circuits, max (bound - t) = " << worst_slack << ", Clifford clamped " << clifford_clamped;
}

struct Spec {
    const char* name;
    double limit;
    void (*body)(Outcome&, std::uint64_t);
};

constexpr Spec kSpecs[kCriterionCount] = {
    {"magic-state closed form", 1.0, magic_state_closed_form},
    {"faithfulness", 60.0, faithfulness},
    {"resource-theory properties", 0.0, resource_properties},
    {"bound chain", 0.0, bound_chain},
    {"power method agreement", 300.0, power_agreement},
    {"Haar average of power", 600.0, haar_average},
    {"doped Clifford circuits", 900.0, doped_circuits},
    {"randomized measurement", 600.0, randomized_measurement},
    {"8-OTOC Haar average", 0.0, otoc8},
    {"T-count bound", 0.0, tcount_bound},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > kCriterionCount) throw DomainError("criterion id out of range");
    const Spec& spec = kSpecs[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = spec.name;
    r.limit_seconds = spec.limit;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        spec.body(out, derive_seed(seed, static_cast<std::uint64_t>(id)));
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (spec.limit > 0.0 && r.seconds > spec.limit) {
        out.require(false, "runtime " + str(r.seconds) + " s exceeds " + str(spec.limit) + " s");
    }
    r.passed = out.passed;
    r.detail = out.detail.str();
    return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> results;
    for (int id = 1; id <= kCriterionCount; ++id) {
        results.push_back(run_criterion(id, seed));
        if (on_result) on_result(results.back());
    }
    return results;
}

std::string format(const CriterionResult& result) {
    std::ostringstream ss;
    ss.precision(3);
    ss << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << ' ' << result.name << " (" << std::fixed
       << result.seconds << " s): " << result.detail;
    return ss.str();
}

}  // namespace srent::acceptance
