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

#include "srent/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace srent {

namespace {

unsigned initial_thread_count() {
    if (const char* env = std::getenv("SRENT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<unsigned>& configured_threads() {
    static std::atomic<unsigned> value{initial_thread_count()};
    return value;
}

// Nested parallel calls run serially inside a worker.
thread_local bool in_worker = false;

}  // namespace

unsigned thread_count() { return configured_threads().load(); }

void set_thread_count(unsigned threads) { configured_threads().store(std::max(1u, threads)); }

namespace detail {

void run_blocks(std::size_t count, unsigned threads, const std::function<void(std::size_t, std::size_t)>& block) {
    if (count == 0) return;
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
    if (workers == 1 || in_worker) {
        block(0, count);
        return;
    }
    // Dynamic chunking; ownership of each index is exclusive, so the schedule
    // does not influence results.
    const std::size_t chunk = std::max<std::size_t>(1, count / (workers * 8));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        const bool outer = in_worker;
        in_worker = true;
        struct Reset {
            bool value;
            ~Reset() { in_worker = value; }
        } reset{outer};
        for (;;) {
            const std::size_t begin = next.fetch_add(chunk);
            if (begin >= count) return;
            try {
                block(begin, std::min(count, begin + chunk));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

}  // namespace srent
