/******************************************************************************
 * Copyright 2026 The saft authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * @file parallel.hpp Deterministic index-chunked parallel loops
 *
 *****************************************************************************/
#ifndef SAFT_DETAIL_PARALLEL_HPP
#define SAFT_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace saft::detail {

/// Worker cap: SAFT_THREADS env var when set, else hardware concurrency.
inline std::size_t thread_cap()
{
    if (const char* env = std::getenv("SAFT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/**
 * @brief Run fn(i) for i in [0, n). Each index writes only its own slot, so
 *        the result is identical for every thread count. The first exception
 *        thrown by any worker is rethrown on the calling thread.
 */
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn)
{
    const std::size_t workers = std::min(thread_cap(), n == 0 ? std::size_t(1) : n);
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr err;
    std::mutex err_mutex;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn, &err, &err_mutex] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

} // namespace saft::detail

#endif // SAFT_DETAIL_PARALLEL_HPP
