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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace srent {

/// Record of one Monte Carlo estimate.
struct EstimatorResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Closed-form value the estimate targets, when one exists.
    std::optional<double> analytic;
    /// Sample standard deviation of the per-sample values.
    double spread = 0.0;
    /// Leave-one-out standard error, when the estimator computes one.
    std::optional<double> jackknife_error;

    /// |estimate - analytic| in units of std_error. Infinite without an analytic value
    /// or with zero std_error and a nonzero gap.
    double z_score() const;
    bool within(double sigmas) const { return analytic && z_score() <= sigmas; }
};

struct SampleSummary {
    double mean = 0.0;
    double std_error = 0.0;
    double std_dev = 0.0;
    std::size_t count = 0;
};

/// Mean, standard error and unbiased standard deviation of `values`.
SampleSummary summarize(std::span<const double> values);

/// Leave-one-out jackknife standard error of g(mean of values).
template <class G>
double jackknife_error(std::span<const double> values, G&& g);

}  // namespace srent

#include "srent/estimator_inl.hpp"
