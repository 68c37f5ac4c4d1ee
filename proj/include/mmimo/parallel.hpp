// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Deterministic fan-out over trial indices.
//
// Results are written into a slot per index and reduced afterwards in a fixed
// pairwise tree, so the sum never depends on thread count or scheduling.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace mmimo {

/// Thread count from MMIMO_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("MMIMO_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, n) on up to `threads` workers (0 = default) and
/// returns the results in index order. The first exception thrown by any
/// call is rethrown after all workers have joined.
template <class Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> out(n);
    if (threads == 0) threads = default_thread_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        constexpr std::size_t kChunk = 16;
        for (;;) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= n) return;
            const std::size_t end = std::min(n, begin + kChunk);
            try {
                for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n);
                return;
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

/// Pairwise (tree) summation in index order.
inline double pairwise_sum(std::span<const double> v) {
    if (v.empty()) return 0.0;
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

struct SampleStats {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t count = 0;
};

/// Mean and standard error of the mean (sample std / sqrt(n)), both reduced
/// pairwise.
inline SampleStats sample_stats(std::span<const double> v) {
    SampleStats s;
    s.count = v.size();
    if (v.empty()) return s;
    s.mean = pairwise_sum(v) / static_cast<double>(v.size());
    if (v.size() > 1) {
        std::vector<double> sq(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - s.mean) * (v[i] - s.mean);
        const double var = pairwise_sum(sq) / static_cast<double>(v.size() - 1);
        s.std_error = std::sqrt(var / static_cast<double>(v.size()));
    }
    return s;
}

}  // namespace mmimo
