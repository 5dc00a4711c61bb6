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
#include <iosfwd>
#include <span>
#include <vector>

#include "srent/clifford.hpp"
#include "srent/estimator.hpp"
#include "srent/states.hpp"

namespace srent {

/// Outcome data for one sampled Clifford.
struct CliffordRecord {
    std::size_t index = 0;
    /// Exact outcome probabilities (exact mode) or empty.
    std::vector<double> probabilities;
    /// Shot counts per outcome (shot mode) or empty.
    std::vector<std::uint64_t> counts;
    /// Weighted four-string sum for this Clifford: exact value or its unbiased shot estimate.
    double inner = 0.0;
};

struct MeasurementBatch {
    int n = 1;
    std::uint64_t seed = 0;
    /// Shots per Clifford; 0 means exact probabilities.
    std::uint64_t shots = 0;
    std::vector<CliffordRecord> records;

    bool exact() const { return shots == 0; }
    /// Checks probabilities sum to 1 and counts sum to `shots`.
    void validate() const;
};

namespace protocol {

/// p(s) = |<s|C|psi>|^2.
std::vector<double> outcome_distribution(const StateVector& psi, const CliffordTableau& c);

/// sum over four outcome strings of (-2)^{-|s1^s2^s3^s4|} p(s1)p(s2)p(s3)p(s4), by direct O(d^4) loop.
double weighted_quad_sum_naive(std::span<const double> p);

/// Same sum through the Walsh-Hadamard transform q of p:
/// d^{-1} sum_k prod_i (1 - (-1)^{k_i}/2) q(k)^4.
double weighted_quad_sum(std::span<const double> p);

/// Unbiased estimate of weighted_quad_sum(p) from multinomial shot counts: the
/// average weight over ordered 4-tuples of distinct shots. Needs at least 4 shots.
double weighted_quad_sum_shots(std::span<const std::uint64_t> counts);

/// Draws `shots` outcomes from p by inverse-CDF sampling.
std::vector<std::uint64_t> sample_counts(std::span<const double> p, std::uint64_t shots, Rng& rng);

/// Clifford i is drawn from Rng::stream(seed, i) in both modes, so exact and shot
/// batches with the same seed see the same Cliffords.
MeasurementBatch measure_exact(const StateVector& psi, std::size_t num_cliffords, std::uint64_t seed);
MeasurementBatch measure_shots(const StateVector& psi, std::size_t num_cliffords, std::uint64_t shots,
                               std::uint64_t seed);

/// -log2(mean inner) - log2 d with delta-method and jackknife standard errors.
EstimatorResult aggregate(const MeasurementBatch& batch);

EstimatorResult estimate_m2_exact(const StateVector& psi, std::size_t num_cliffords, std::uint64_t seed);
EstimatorResult estimate_m2_shots(const StateVector& psi, std::size_t num_cliffords, std::uint64_t shots,
                                  std::uint64_t seed);

/// One row per Clifford: clifford, shots, inner, outcomes (space separated).
void write_batch_csv(const MeasurementBatch& batch, std::ostream& out);

}  // namespace protocol

}  // namespace srent
