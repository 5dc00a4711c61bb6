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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <vector>

namespace srent {

/// Worker count used by parallel_map when none is given.
/// Initialized from SRENT_THREADS, falling back to the hardware concurrency.
unsigned thread_count();
void set_thread_count(unsigned threads);

namespace detail {
void run_blocks(std::size_t count, unsigned threads, const std::function<void(std::size_t, std::size_t)>& block);
}

/// Evaluates fn(i) for i in [0, count) on `threads` workers and returns the
/// results in index order. Each index is computed independently, so the
/// output is identical for any thread count.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn, unsigned threads = 0) {
    using R = std::decay_t<std::invoke_result_t<Fn&, std::size_t>>;
    std::vector<R> out(count);
    detail::run_blocks(count, threads == 0 ? thread_count() : threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
    });
    return out;
}

/// Sum of fn(i) over [0, count). Per-block partial sums are merged in block
/// order; the block partition depends only on `count`, never on the thread count.
template <class T, class Fn>
T parallel_sum(std::size_t count, Fn&& fn, unsigned threads = 0) {
    constexpr std::size_t kBlock = 256;
    const std::size_t blocks = (count + kBlock - 1) / kBlock;
    auto partial = parallel_map(
        blocks,
        [&](std::size_t b) {
            T acc{};
            const std::size_t end = std::min(count, (b + 1) * kBlock);
            for (std::size_t i = b * kBlock; i < end; ++i) acc += fn(i);
            return acc;
        },
        threads);
    T total{};
    for (const auto& p : partial) total += p;
    return total;
}

}  // namespace srent
