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

#include "srent/protocol.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "srent/errors.hpp"
#include "srent/parallel.hpp"
#include "srent/walsh.hpp"

namespace srent {

void MeasurementBatch::validate() const {
    for (const auto& r : records) {
        if (exact()) {
            const double total = std::accumulate(r.probabilities.begin(), r.probabilities.end(), 0.0);
            if (std::abs(total - 1.0) > kInvariantTolerance) throw DomainError("outcome probabilities must sum to 1");
        } else {
            const auto total = std::accumulate(r.counts.begin(), r.counts.end(), std::uint64_t{0});
            if (total != shots) throw DomainError("shot counts must sum to the shot total");
        }
    }
}

namespace protocol {

namespace {

constexpr std::uint64_t kShotStreamTag = 0x73686f7473ull;

int qubits_for(std::size_t d) {
    if (d == 0 || !std::has_single_bit(d)) throw DimensionError("outcome vector length must be a power of two");
    return std::countr_zero(d);
}

/// d^{-1} sum_k 2^{-n} 3^{|k|} v(k)^power, the transform-side weight of (-2)^{-|s|}.
double weighted_transform_sum(std::vector<double> v, int power) {
    const std::size_t d = v.size();
    const int n = qubits_for(d);
    walsh_hadamard(std::span<double>(v));
    double total = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double w = std::pow(3.0, std::popcount(k)) / static_cast<double>(std::size_t{1} << n);
        const double q = v[k];
        total += w * (power == 4 ? q * q * q * q : q * q);
    }
    return total / static_cast<double>(d);
}

}  // namespace

std::vector<double> outcome_distribution(const StateVector& psi, const CliffordTableau& c) {
    if (psi.num_qubits() != c.num_qubits()) throw DimensionError("state and Clifford sizes differ");
    const auto out = clifford::apply(c, psi);
    std::vector<double> p(out.dim());
    for (std::size_t s = 0; s < p.size(); ++s) p[s] = std::norm(out[s]);
    return p;
}

double weighted_quad_sum_naive(std::span<const double> p) {
    const std::size_t d = p.size();
    qubits_for(d);
    double total = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t c = 0; c < d; ++c) {
                const double pabc = p[a] * p[b] * p[c];
                for (std::size_t e = 0; e < d; ++e) {
                    total += std::pow(-2.0, -std::popcount(a ^ b ^ c ^ e)) * pabc * p[e];
                }
            }
        }
    }
    return total;
}

double weighted_quad_sum(std::span<const double> p) {
    return weighted_transform_sum(std::vector<double>(p.begin(), p.end()), 4);
}

double weighted_quad_sum_shots(std::span<const std::uint64_t> counts) {
    const auto total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total < 4) throw DomainError("the shot estimator needs at least 4 shots");
    const std::vector<double> c(counts.begin(), counts.end());
    const double s4 = weighted_transform_sum(c, 4);
    const double s2 = weighted_transform_sum(c, 2);
    const double n = static_cast<double>(total);
    // Inclusion-exclusion over coincident shot indices in the all-tuples sum.
    const double distinct = s4 - 6.0 * n * s2 + 3.0 * n * n + 8.0 * s2 - 6.0 * n;
    return distinct / (n * (n - 1.0) * (n - 2.0) * (n - 3.0));
}

std::vector<std::uint64_t> sample_counts(std::span<const double> p, std::uint64_t shots, Rng& rng) {
    std::vector<double> cdf(p.size());
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    std::vector<std::uint64_t> counts(p.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * cdf.back();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        ++counts[static_cast<std::size_t>(it - cdf.begin())];
    }
    return counts;
}

MeasurementBatch measure_exact(const StateVector& psi, std::size_t num_cliffords, std::uint64_t seed) {
    MeasurementBatch batch;
    batch.n = psi.num_qubits();
    batch.seed = seed;
    batch.records = parallel_map(num_cliffords, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        CliffordRecord r;
        r.index = i;
        r.probabilities = outcome_distribution(psi, clifford::random_clifford(psi.num_qubits(), rng));
        r.inner = weighted_quad_sum(r.probabilities);
        return r;
    });
    return batch;
}

MeasurementBatch measure_shots(const StateVector& psi, std::size_t num_cliffords, std::uint64_t shots,
                               std::uint64_t seed) {
    if (shots < 4) throw DomainError("the shot estimator needs at least 4 shots per Clifford");
    MeasurementBatch batch;
    batch.n = psi.num_qubits();
    batch.seed = seed;
    batch.shots = shots;
    const std::uint64_t shot_master = derive_seed(seed, kShotStreamTag);
    batch.records = parallel_map(num_cliffords, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        Rng shot_rng = Rng::stream(shot_master, i);
        const auto p = outcome_distribution(psi, clifford::random_clifford(psi.num_qubits(), rng));
        CliffordRecord r;
        r.index = i;
        r.counts = sample_counts(p, shots, shot_rng);
        r.inner = weighted_quad_sum_shots(r.counts);
        return r;
    });
    return batch;
}

EstimatorResult aggregate(const MeasurementBatch& batch) {
    std::vector<double> inner;
    inner.reserve(batch.records.size());
    for (const auto& r : batch.records) inner.push_back(r.inner);
    const auto s = summarize(inner);
    if (!(s.mean > 0.0)) throw EstimationError("mean weighted sum is not positive; increase the sample count");
    const double n = static_cast<double>(batch.n);
    EstimatorResult r;
    r.estimate = -std::log2(s.mean) - n;
    r.std_error = s.std_error / (s.mean * std::log(2.0));
    r.samples = inner.size();
    r.seed = batch.seed;
    r.spread = s.std_dev;
    r.jackknife_error = jackknife_error(inner, [n](double m) {
        return m > 0.0 ? -std::log2(m) - n : std::numeric_limits<double>::quiet_NaN();
    });
    return r;
}

EstimatorResult estimate_m2_exact(const StateVector& psi, std::size_t num_cliffords, std::uint64_t seed) {
    return aggregate(measure_exact(psi, num_cliffords, seed));
}

EstimatorResult estimate_m2_shots(const StateVector& psi, std::size_t num_cliffords, std::uint64_t shots,
                                  std::uint64_t seed) {
    return aggregate(measure_shots(psi, num_cliffords, shots, seed));
}

void write_batch_csv(const MeasurementBatch& batch, std::ostream& out) {
    out << "clifford,shots,inner,outcomes\n";
    out.precision(17);
    for (const auto& r : batch.records) {
        out << r.index << ',' << batch.shots << ',' << r.inner << ',';
        if (batch.exact()) {
            for (std::size_t i = 0; i < r.probabilities.size(); ++i) out << (i ? " " : "") << r.probabilities[i];
        } else {
            for (std::size_t i = 0; i < r.counts.size(); ++i) out << (i ? " " : "") << r.counts[i];
        }
        out << '\n';
    }
}

}  // namespace protocol

}  // namespace srent
