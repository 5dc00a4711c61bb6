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

#include "srent/magic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "srent/clifford.hpp"
#include "srent/errors.hpp"
#include "srent/parallel.hpp"

namespace srent {

XiDistribution::XiDistribution(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != pauli::count(n)) throw DimensionError("Xi distribution must have 4^n entries");
}

double XiDistribution::total() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

std::size_t XiDistribution::support() const {
    const double d = static_cast<double>(dim());
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [d](double v) { return v * d > kSupportTolerance; }));
}

double BoundCheck::margin() const { return kind == Kind::kEqual ? std::abs(lhs - rhs) : rhs - lhs; }

bool MagicReport::all_bounds_hold() const {
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.holds; });
}

namespace magic {

namespace {

XiDistribution from_spectrum(int n, std::vector<double> spectrum) {
    const double inv_d = 1.0 / static_cast<double>(std::size_t{1} << n);
    for (auto& v : spectrum) v = v * v * inv_d;
    return XiDistribution(n, std::move(spectrum));
}

}  // namespace

XiDistribution xi_distribution(const StateVector& psi) {
    return from_spectrum(psi.num_qubits(), pauli::expectation_spectrum(psi));
}

XiDistribution xi_distribution(const DensityMatrix& rho) {
    return from_spectrum(rho.num_qubits(), pauli::expectation_spectrum(rho));
}

double renyi_entropy(const XiDistribution& xi, double alpha) {
    if (!(alpha >= 0.0)) throw DomainError("Renyi index alpha must be nonnegative");
    const double log_d = static_cast<double>(xi.num_qubits());
    const auto& v = xi.values();
    if (alpha == 0.0) return std::log2(static_cast<double>(xi.support())) - log_d;
    if (alpha == 1.0) {
        double h = 0.0;
        for (double p : v) {
            if (p > 0.0) h -= p * std::log2(p);
        }
        return h - log_d;
    }
    double s = 0.0;
    for (double p : v) {
        if (p > 0.0) s += std::pow(p, alpha);
    }
    return std::log2(s) / (1.0 - alpha) - log_d;
}

double renyi_entropy(const StateVector& psi, double alpha) { return renyi_entropy(xi_distribution(psi), alpha); }

double linear_entropy(const XiDistribution& xi) {
    double s = 0.0;
    for (double p : xi.values()) s += p * p;
    return 1.0 - static_cast<double>(xi.dim()) * s;
}

double mixed_magic(const DensityMatrix& rho) {
    const auto t = pauli::expectation_spectrum(rho);
    double s2 = 0.0, s4 = 0.0;
    for (double v : t) {
        const double v2 = v * v;
        s2 += v2;
        s4 += v2 * v2;
    }
    return -std::log2(s4 / s2);
}

std::uint64_t stabilizer_group_size(const StateVector& psi) {
    const auto t = pauli::expectation_spectrum(psi);
    return static_cast<std::uint64_t>(
        std::count_if(t.begin(), t.end(), [](double v) { return std::abs(v) > 1.0 - kNullityTolerance; }));
}

double stabilizer_nullity(const StateVector& psi) {
    return static_cast<double>(psi.num_qubits()) - std::log2(static_cast<double>(stabilizer_group_size(psi)));
}

double stabilizer_norm(const StateVector& psi) {
    const auto t = pauli::expectation_spectrum(psi);
    double s = 0.0;
    for (double v : t) s += std::abs(v);
    return s / static_cast<double>(psi.dim());
}

double magic_state_m2() { return 1.0 - std::log2(1.5); }

double magic_state_closed_form(int n, double alpha) {
    if (!(alpha >= 0.0)) throw DomainError("Renyi index alpha must be nonnegative");
    const double nn = static_cast<double>(n);
    if (alpha == 1.0) return nn / 2.0;
    return (nn * std::log2(std::pow(2.0, 1.0 - alpha) + 1.0) - nn) / (1.0 - alpha);
}

int synthesis_copy_bound(double m2) {
    if (!(m2 >= 0.0)) throw DomainError("synthesis bound needs a nonnegative M_2");
    const double copies = m2 / magic_state_m2();
    return static_cast<int>(std::ceil(copies - 1e-9));
}

MagicReport bound_report(const StateVector& psi, std::span<const double> alphas) {
    constexpr double kTol = 1e-9;
    constexpr double kIdentityTol = 1e-10;
    const auto spectrum = pauli::expectation_spectrum(psi);
    const int n = psi.num_qubits();
    const double d = static_cast<double>(psi.dim());

    std::vector<double> xi_values(spectrum.size());
    double norm_sum = 0.0;
    std::uint64_t stab = 0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        xi_values[i] = spectrum[i] * spectrum[i] / d;
        norm_sum += std::abs(spectrum[i]);
        stab += std::abs(spectrum[i]) > 1.0 - kNullityTolerance ? 1 : 0;
    }
    const XiDistribution xi(n, std::move(xi_values));

    MagicReport r;
    r.n = n;
    r.alphas.assign(alphas.begin(), alphas.end());
    for (double a : alphas) r.m_alpha.push_back(renyi_entropy(xi, a));
    r.m_lin = linear_entropy(xi);
    r.m0 = renyi_entropy(xi, 0.0);
    r.nullity = static_cast<double>(n) - std::log2(static_cast<double>(stab));
    r.stab_norm = norm_sum / d;

    using Kind = BoundCheck::Kind;
    auto add = [&r](std::string name, Kind kind, double lhs, double rhs) {
        bool holds = false;
        switch (kind) {
            case Kind::kLessEqual:
                holds = lhs <= rhs + kTol;
                break;
            case Kind::kLess:
                holds = lhs < rhs;
                break;
            case Kind::kEqual:
                holds = std::abs(lhs - rhs) <= kIdentityTol;
                break;
        }
        r.bounds.push_back({std::move(name), kind, lhs, rhs, holds});
    };

    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const std::string tag = "M_" + std::to_string(alphas[i]);
        add(tag + " <= nullity", Kind::kLessEqual, r.m_alpha[i], r.nullity);
        if (alphas[i] > 0.0) add(tag + " <= M_0", Kind::kLessEqual, r.m_alpha[i], r.m0);
    }
    add("M_0 <= nullity", Kind::kLessEqual, r.m0, r.nullity);
    const double m2 = renyi_entropy(xi, 2.0);
    add("M_2 < log2(d+1) - 1", Kind::kLess, m2, std::log2(d + 1.0) - 1.0);
    add("M_lin < 1 - 2/(d+1)", Kind::kLess, r.m_lin, 1.0 - 2.0 / (d + 1.0));
    add("M_2 = -log2(1 - M_lin)", Kind::kEqual, m2, -std::log2(1.0 - r.m_lin));
    add("M_1/2 = 2 log2 D", Kind::kEqual, renyi_entropy(xi, 0.5), 2.0 * std::log2(r.stab_norm));

    std::vector<std::pair<double, double>> by_alpha;
    for (std::size_t i = 0; i < alphas.size(); ++i) by_alpha.emplace_back(alphas[i], r.m_alpha[i]);
    std::sort(by_alpha.begin(), by_alpha.end());
    for (std::size_t i = 1; i < by_alpha.size(); ++i) {
        add("M_" + std::to_string(by_alpha[i].first) + " <= M_" + std::to_string(by_alpha[i - 1].first),
            Kind::kLessEqual, by_alpha[i].second, by_alpha[i - 1].second);
    }
    return r;
}

MagicReport bound_report(const StateVector& psi) {
    static constexpr double kDefault[] = {0.5, 1.0, 2.0, 3.0};
    return bound_report(psi, kDefault);
}

DensityMatrix random_free_state(int n, int generators, Rng& rng) {
    if (generators < 0 || generators > n) throw DimensionError("free state needs 0..n generators");
    const auto c = clifford::random_clifford(n, rng);
    std::vector<SignedPauli> gens;
    for (int j = 0; j < generators; ++j) {
        auto g = c.z_image(j);
        g.sign = rng.coin() ? -1 : 1;
        gens.push_back(g);
    }
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    CMatrix chi = CMatrix::Zero(d, d);
    // Sum over all 2^m subgroup elements; the generators commute, so each product is Hermitian with a real sign.
    for (std::uint32_t mask = 0; mask < (1u << generators); ++mask) {
        PauliString p = PauliString::identity(n);
        int k = 0;
        int sign = 1;
        for (int j = 0; j < generators; ++j) {
            if (!((mask >> j) & 1u)) continue;
            const auto prod = pauli::mul(p, gens[static_cast<std::size_t>(j)].pauli);
            p = prod.pauli;
            k += exponent(prod.phase);
            sign *= gens[static_cast<std::size_t>(j)].sign;
        }
        if (((k % 4) + 4) % 4 == 2) sign = -sign;
        chi += static_cast<double>(sign) * pauli::to_matrix(p);
    }
    chi /= static_cast<double>(d);
    DensityMatrix rho(n, std::move(chi));
    rho.validate_positive();
    return rho;
}

PartialTraceScan partial_trace_scan(int n, std::size_t samples, std::uint64_t seed) {
    if (n < 2) throw DimensionError("partial trace scan needs at least 2 qubits");
    struct Sample {
        double full = 0.0;
        double reduced = 0.0;
    };
    std::vector<int> keep(static_cast<std::size_t>(n - 1));
    std::iota(keep.begin(), keep.end(), 0);
    const auto results = parallel_map(samples, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        const auto a = states::haar_state(n, rng);
        CMatrix m = a.amplitudes() * a.amplitudes().adjoint();
        if (i % 2 == 1) {
            const auto b = states::haar_state(n, rng);
            const double w = rng.uniform();
            m = w * m + (1.0 - w) * (b.amplitudes() * b.amplitudes().adjoint());
        }
        m = 0.5 * (m + m.adjoint());
        m /= m.trace().real();
        const DensityMatrix rho(n, m);
        return Sample{mixed_magic(rho), mixed_magic(states::partial_trace(rho, keep))};
    });
    PartialTraceScan scan;
    scan.samples = samples;
    scan.seed = seed;
    scan.max_increase = -std::numeric_limits<double>::infinity();
    for (const auto& s : results) {
        const double inc = s.reduced - s.full;
        scan.max_increase = std::max(scan.max_increase, inc);
        if (inc > 1e-9) ++scan.violations;
        scan.mean_full += s.full;
        scan.mean_reduced += s.reduced;
    }
    if (samples > 0) {
        scan.mean_full /= static_cast<double>(samples);
        scan.mean_reduced /= static_cast<double>(samples);
    }
    return scan;
}

}  // namespace magic

}  // namespace srent
