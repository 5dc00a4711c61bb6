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

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace srent {

inline double EstimatorResult::z_score() const {
    if (!analytic) return std::numeric_limits<double>::infinity();
    const double gap = std::abs(estimate - *analytic);
    if (std_error > 0.0) return gap / std_error;
    return gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

inline SampleSummary summarize(std::span<const double> values) {
    SampleSummary s;
    s.count = values.size();
    if (values.empty()) return s;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.std_dev = std::sqrt(ss / static_cast<double>(values.size() - 1));
        s.std_error = s.std_dev / std::sqrt(static_cast<double>(values.size()));
    }
    return s;
}

template <class G>
double jackknife_error(std::span<const double> values, G&& g) {
    const std::size_t m = values.size();
    if (m < 2) return 0.0;
    const double total = std::accumulate(values.begin(), values.end(), 0.0);
    double mean_loo = 0.0;
    std::vector<double> loo(m);
    for (std::size_t i = 0; i < m; ++i) {
        loo[i] = g((total - values[i]) / static_cast<double>(m - 1));
        mean_loo += loo[i];
    }
    mean_loo /= static_cast<double>(m);
    double ss = 0.0;
    for (double v : loo) ss += (v - mean_loo) * (v - mean_loo);
    return std::sqrt(static_cast<double>(m - 1) / static_cast<double>(m) * ss);
}

}  // namespace srent
